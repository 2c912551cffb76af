#include "qaw/scalar.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <sstream>

namespace qaw {
namespace {

// Plain polynomials over Z: coefficient vectors, constant term first, no
// leading zeros (empty = zero). These back both LaurentPoly and the gcd /
// factorization machinery.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool pzero(const Poly& p) { return p.empty(); }
long pdeg(const Poly& p) { return static_cast<long>(p.size()) - 1; }


Poly psub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly pmul(const Poly& a, const Poly& b) {
  if (pzero(a) || pzero(b)) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Poly pscale(const Poly& a, const BigInt& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}


BigInt content(const Poly& a) {
  BigInt g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial
}

Poly divide_by_int(const Poly& a, const BigInt& c) {
  Poly r = a;
  for (auto& x : r) {
    assert(mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()));
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

/// Primitive part with positive leading coefficient.
Poly primitive(const Poly& a) {
  if (pzero(a)) return {};
  BigInt c = content(a);
  if (a.back() < 0) c = -c;
  return divide_by_int(a, c);
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Poly prem(Poly a, const Poly& b) {
  assert(!pzero(b));
  long db = pdeg(b);
  const BigInt& lb = b.back();
  while (!pzero(a) && pdeg(a) >= db) {
    long k = pdeg(a) - db;
    BigInt la = a.back();
    for (auto& x : a) x *= lb;
    // subtract la * q^k * b
    for (long i = 0; i <= db; ++i) a[k + i] -= la * b[i];
    trim(a);
  }
  return a;
}

/// gcd over Q[q] via primitive-part Euclidean remainder sequences; result is
/// primitive with positive leading coefficient.
Poly pgcd(Poly a, Poly b) {
  a = primitive(a);
  b = primitive(b);
  if (pzero(a)) return b;
  if (pzero(b)) return a;
  if (pdeg(a) < pdeg(b)) std::swap(a, b);
  while (!pzero(b)) {
    Poly r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Exact division in Z[q]; nullopt when b does not divide a over Z[q].
std::optional<Poly> pdiv_exact(const Poly& a, const Poly& b) {
  assert(!pzero(b));
  if (pzero(a)) return Poly{};
  if (pdeg(a) < pdeg(b)) return std::nullopt;
  Poly rem = a;
  Poly quot(pdeg(a) - pdeg(b) + 1);
  const BigInt& lb = b.back();
  for (long k = pdeg(a) - pdeg(b); k >= 0; --k) {
    if (static_cast<size_t>(k + pdeg(b)) >= rem.size() || rem[k + pdeg(b)] == 0) {
      quot[k] = 0;
      continue;
    }
    BigInt qc;
    if (!mpz_divisible_p(rem[k + pdeg(b)].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), rem[k + pdeg(b)].get_mpz_t(), lb.get_mpz_t());
    quot[k] = qc;
    for (long i = 0; i <= pdeg(b); ++i) rem[k + i] -= qc * b[i];
    trim(rem);
  }
  if (!pzero(rem)) return std::nullopt;
  trim(quot);
  return quot;
}

Poly pderiv(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

BigRat peval(const Poly& a, const BigRat& p) {
  BigRat r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * p + BigRat(*it);
  return r;
}

// ---------------------------------------------------------------------------
// Irreducibility machinery for factor_report.

using u64 = uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }

using PolyP = std::vector<u64>;  // mod-p polynomial, constant first, trimmed

void ptrim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmod_of(const Poly& a, u64 p) {
  PolyP r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    BigInt m = a[i] % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    r[i] = m.get_ui();
  }
  ptrim(r);
  return r;
}

PolyP pmul_mod(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + (__uint128_t)a[i] * b[j]) % p;
  }
  ptrim(r);
  return r;
}

u64 invmod(u64 a, u64 p) {  // p prime
  u64 r = 1, e = p - 2, base = a % p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

PolyP prem_mod(PolyP a, const PolyP& f, u64 p) {
  u64 inv = invmod(f.back(), p);
  while (a.size() >= f.size()) {
    u64 c = mulmod(a.back(), inv, p);
    size_t k = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i)
      a[k + i] = (a[k + i] + p - mulmod(c, f[i], p)) % p;
    ptrim(a);
    if (a.empty()) break;
  }
  return a;
}

PolyP pgcd_mod(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    PolyP r = prem_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyP ppow_mod(PolyP base, u64 e, const PolyP& f, u64 p) {
  PolyP r{1};
  base = prem_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = prem_mod(pmul_mod(r, base, p), f, p);
    base = prem_mod(pmul_mod(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

/// g(h) mod f over GF(p), by Horner.
PolyP pcompose_mod(const PolyP& g, const PolyP& h, const PolyP& f, u64 p) {
  PolyP r;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    r = pmul_mod(r, h, p);
    r.resize(std::max<size_t>(r.size(), 1), 0);
    r[0] = (r[0] + *it) % p;
    ptrim(r);
    r = prem_mod(std::move(r), f, p);
  }
  return r;
}

/// Frobenius-based irreducibility test of f mod p. Sound certificate:
/// squarefree and irreducible mod p implies irreducible over Q, provided the
/// leading coefficient does not vanish mod p.
bool irreducible_mod_p(const Poly& f, u64 p) {
  if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) return false;
  PolyP fp = pmod_of(f, p);
  long n = pdeg(f);
  // squarefree mod p
  PolyP d(fp.size() - 1);
  for (size_t i = 1; i < fp.size(); ++i) d[i - 1] = mulmod(fp[i], i % p, p);
  ptrim(d);
  if (d.empty() || pgcd_mod(fp, d, p).size() > 1) return false;
  // powers[i] = x^(p^i) mod f, via iterated Frobenius composition
  PolyP x{0, 1};
  PolyP frob = ppow_mod(x, p, fp, p);
  std::vector<PolyP> powers{x, frob};
  for (long i = 2; i <= n; ++i) powers.push_back(pcompose_mod(powers[i - 1], frob, fp, p));
  auto minus_x = [&](PolyP g) {
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    ptrim(g);
    return g;
  };
  if (!minus_x(powers[n]).empty()) return false;  // x^(p^n) != x
  for (long l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool prime = true;
    for (long d2 = 2; d2 * d2 <= l; ++d2)
      if (l % d2 == 0) prime = false;
    if (!prime) continue;
    if (pgcd_mod(fp, minus_x(powers[n / l]), p).size() > 1) return false;
  }
  return true;
}

std::vector<BigInt> small_divisors(const BigInt& n0, size_t cap = 4096) {
  // All positive divisors when n0 factors over trial division up to 10^6;
  // otherwise the divisors found within the cap (the leftover cofactor is
  // included as a candidate). Used only for rational-root candidates.
  BigInt n = abs(n0);
  std::vector<std::pair<BigInt, int>> fac;
  for (long p = 2; p <= 1000000L && n > 1; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      fac.emplace_back(p, e);
    }
    if (BigInt(p) * p > n) break;
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (auto& [p, e] : fac) {
    size_t sz = divs.size();
    BigInt pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) {
        divs.push_back(divs[j] * pe);
        if (divs.size() > cap) return divs;
      }
    }
  }
  return divs;
}

/// Extract all rational roots of a primitive polynomial; returns the linear
/// factors (s*q - r) and divides them out of f.
std::vector<Poly> extract_rational_roots(Poly& f) {
  std::vector<Poly> out;
  bool again = true;
  while (again && pdeg(f) >= 1) {
    again = false;
    auto ds = small_divisors(f.front());
    auto ls = small_divisors(f.back());
    for (const auto& rr : ds) {
      for (const auto& ss : ls) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), rr.get_mpz_t(), ss.get_mpz_t());
        if (g != 1) continue;
        for (int sign = 0; sign < 2 && !again; ++sign) {
          BigInt num = sign ? -rr : rr;
          if (peval(f, BigRat(num) / BigRat(ss)) == 0) {
            Poly lin = primitive(Poly{-num, ss});  // s*q - num
            if (auto quot = pdiv_exact(f, lin)) {   // exact by Gauss's lemma
              out.push_back(lin);
              f = primitive(*quot);
              again = true;
            }
          }
        }
        if (again) break;
      }
      if (again) break;
    }
  }
  return out;
}

/// Try to split a quartic into two integer quadratics. Returns factors or empty.
std::vector<Poly> split_quartic(const Poly& f) {
  if (pdeg(f) != 4) return {};
  // f = (a2 q^2 + a1 q + a0)(b2 q^2 + b1 q + b0) over Z, content 1
  const BigInt &c0 = f[0], &c1 = f[1], &c2 = f[2], &c3 = f[3], &c4 = f[4];
  auto lead_divs = small_divisors(c4);
  auto const_divs = small_divisors(c0);
  for (const auto& a2 : lead_divs) {
    BigInt b2;
    mpz_divexact(b2.get_mpz_t(), c4.get_mpz_t(), a2.get_mpz_t());
    for (const auto& a0mag : const_divs) {
      for (int s0 = 0; s0 < 2; ++s0) {
        BigInt a0 = s0 ? -a0mag : a0mag;
        if (a0 == 0) continue;
        BigInt b0;
        if (!mpz_divisible_p(c0.get_mpz_t(), a0.get_mpz_t())) continue;
        mpz_divexact(b0.get_mpz_t(), c0.get_mpz_t(), a0.get_mpz_t());
        // remaining: a2 b1 + a1 b2 = c3 ; a2 b0 + a1 b1 + a0 b2 = c2 ; a1 b0 + a0 b1 = c1
        // solve the linear system in a1, b1 (two unknowns, three equations)
        // From eqs 1 and 3: [b2 a2; b0 a0] [a1; b1] = [c3; c1]
        BigInt det = b2 * a0 - a2 * b0;
        if (det == 0) continue;
        BigInt a1n = c3 * a0 - a2 * c1;  // a1 = a1n / det
        BigInt b1n = b2 * c1 - c3 * b0;  // b1 = b1n / det
        if (!mpz_divisible_p(a1n.get_mpz_t(), det.get_mpz_t())) continue;
        if (!mpz_divisible_p(b1n.get_mpz_t(), det.get_mpz_t())) continue;
        BigInt a1, b1;
        mpz_divexact(a1.get_mpz_t(), a1n.get_mpz_t(), det.get_mpz_t());
        mpz_divexact(b1.get_mpz_t(), b1n.get_mpz_t(), det.get_mpz_t());
        if (a2 * b0 + a1 * b1 + a0 * b2 != c2) continue;
        Poly fa{a0, a1, a2}, fb{b0, b1, b2};
        trim(fa);
        trim(fb);
        if (pdeg(fa) < 1 || pdeg(fb) < 1) continue;
        return {primitive(fa), primitive(fb)};
      }
    }
  }
  return {};
}

const std::array<Poly, 13> kCyclotomic = {
    Poly{},                      // unused
    Poly{-1, 1},                 // q - 1
    Poly{1, 1},                  // q + 1
    Poly{1, 1, 1},               // q^2 + q + 1
    Poly{1, 0, 1},               // q^2 + 1
    Poly{1, 1, 1, 1, 1},         // Phi_5
    Poly{1, -1, 1},              // q^2 - q + 1
    Poly{1, 1, 1, 1, 1, 1, 1},   // Phi_7
    Poly{1, 0, 0, 0, 1},         // q^4 + 1
    Poly{1, 0, 0, 1, 0, 0, 1},   // Phi_9
    Poly{1, -1, 1, -1, 1},       // Phi_10
    Poly{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},  // Phi_11
    Poly{1, 0, -1, 0, 1},        // q^4 - q^2 + 1
};

/// Factor a primitive squarefree polynomial over Q into (certified) irreducibles.
std::vector<std::pair<Poly, bool>> factor_squarefree(Poly f) {
  std::vector<std::pair<Poly, bool>> out;  // (factor, certified irreducible)
  if (pdeg(f) == 0) return out;
  // peel cyclotomics up to order 12
  bool progressed = true;
  while (progressed && pdeg(f) >= 1) {
    progressed = false;
    for (int n = 1; n <= 12; ++n) {
      if (pdeg(f) < pdeg(kCyclotomic[n])) continue;
      if (auto quot = pdiv_exact(f, kCyclotomic[n])) {
        out.emplace_back(kCyclotomic[n], true);
        f = primitive(*quot);
        progressed = true;
        break;
      }
    }
  }
  for (const auto& lin : extract_rational_roots(f)) out.emplace_back(lin, true);
  std::vector<Poly> queue{f};
  while (!queue.empty()) {
    Poly g = std::move(queue.back());
    queue.pop_back();
    if (pdeg(g) <= 0) continue;
    if (pdeg(g) == 1) {
      out.emplace_back(primitive(g), true);
      continue;
    }
    if (pdeg(g) == 2) {
      BigInt disc = g[1] * g[1] - 4 * g[2] * g[0];
      if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
        Poly h = g;
        auto roots = extract_rational_roots(h);
        for (auto& rt : roots) out.emplace_back(rt, true);
        if (pdeg(h) >= 1) out.emplace_back(h, true);
      } else {
        out.emplace_back(primitive(g), true);
      }
      continue;
    }
    if (pdeg(g) == 3) {
      // cubic with no rational root (already extracted) is irreducible
      out.emplace_back(primitive(g), true);
      continue;
    }
    if (pdeg(g) == 4) {
      auto sp = split_quartic(g);
      if (!sp.empty()) {
        for (auto& h : sp) queue.push_back(h);
        continue;
      }
    }
    bool certified = false;
    for (u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL}) {
      if (irreducible_mod_p(g, p)) {
        certified = true;
        break;
      }
    }
    out.emplace_back(primitive(g), certified);
  }
  return out;
}

/// Exact quotient a / b for a primitive divisor b of a (Gauss's lemma makes
/// the integer division exact).
Poly pdiv_by_primitive(const Poly& a, const Poly& b) {
  auto quot = pdiv_exact(a, b);
  if (!quot) throw std::logic_error("division by a primitive divisor was not exact");
  return std::move(*quot);
}

/// Yun squarefree decomposition of a primitive polynomial: list of
/// (squarefree part, multiplicity).
std::vector<std::pair<Poly, int>> yun_squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (pdeg(f) < 1) return out;
  Poly fp = pderiv(f);
  Poly a = pgcd(f, fp);
  if (pdeg(a) == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  // All intermediate quotients stay integral (divisors are primitive).
  Poly b = pdiv_by_primitive(f, a);
  Poly c = pdiv_by_primitive(fp, a);
  Poly d = psub(c, pderiv(b));
  int i = 1;
  while (pdeg(b) >= 1) {
    Poly g = pgcd(b, d);
    if (pdeg(g) >= 1) out.emplace_back(g, i);
    b = pdiv_by_primitive(b, g);
    c = pdiv_by_primitive(d, g);
    d = psub(c, pderiv(b));
    ++i;
  }
  return out;
}

void factor_side(const Poly& side, BigInt* content_out, std::vector<Factor>* out) {
  if (pzero(side)) return;
  BigInt cont = content(side);
  if (side.back() < 0) cont = -cont;
  *content_out = cont;
  Poly pp = divide_by_int(side, cont);
  if (pdeg(pp) < 1) return;
  for (auto& [sqf, mult] : yun_squarefree(pp)) {
    for (auto& [irr, certified] : factor_squarefree(sqf)) {
      Factor f;
      f.poly = LaurentPoly(0, irr);
      f.multiplicity = mult;
      f.certified_irreducible = certified;
      for (int n = 1; n <= 12; ++n)
        if (irr == kCyclotomic[n]) f.cyclotomic_order = n;
      out->push_back(std::move(f));
    }
  }
  std::sort(out->begin(), out->end(), [](const Factor& a, const Factor& b) {
    if (a.is_q != b.is_q) return a.is_q < b.is_q;
    return a.poly.coeffs() < b.poly.coeffs();
  });
}

std::string coeff_term_str(const BigInt& c, long e, bool first) {
  std::string s;
  BigInt a = abs(c);
  bool neg = c < 0;
  if (first) {
    if (neg) s += "-";
  } else {
    s += neg ? " - " : " + ";
  }
  std::string body;
  if (e == 0) {
    body = a.get_str();
  } else {
    body = (e == 1) ? "q" : "q^" + std::to_string(e);
    if (a != 1) body = a.get_str() + "*" + body;
  }
  return s + body;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) coeffs_ = {BigInt(value)};
}

LaurentPoly::LaurentPoly(BigInt value) {
  if (value != 0) coeffs_ = {std::move(value)};
}

LaurentPoly::LaurentPoly(long shift, std::vector<BigInt> coeffs)
    : shift_(shift), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  size_t lead0 = 0;
  while (lead0 < coeffs_.size() && coeffs_[lead0] == 0) ++lead0;
  if (lead0 > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead0));
    shift_ += static_cast<long>(lead0);
  }
  if (coeffs_.empty()) shift_ = 0;
}

LaurentPoly LaurentPoly::q_pow(long e) { return LaurentPoly(e, {BigInt(1)}); }

BigInt LaurentPoly::coeff_at(long power) const {
  long idx = power - shift_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[idx];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(shift_, o.shift_);
  long hi = std::max(high_degree(), o.high_degree());
  std::vector<BigInt> c(hi - lo + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[shift_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[o.shift_ - lo + i] += o.coeffs_[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  return LaurentPoly(shift_ + o.shift_, pmul(coeffs_, o.coeffs_));
}

LaurentPoly LaurentPoly::shifted(long e) const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  r.shift_ += e;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& o) const {
  assert(!o.is_zero());
  if (is_zero()) return LaurentPoly();
  auto quot = pdiv_exact(coeffs_, o.coeffs_);
  if (!quot) return std::nullopt;
  return LaurentPoly(shift_ - o.shift_, std::move(*quot));
}

BigRat LaurentPoly::eval(const BigRat& p) const {
  if (p == 0) throw PoleError("evaluation at q = 0");
  BigRat body = peval(coeffs_, p);
  BigRat shift_val = 1;
  long e = shift_;
  BigRat base = e < 0 ? BigRat(1) / p : p;
  for (long i = 0; i < std::abs(e); ++i) shift_val *= base;
  return body * shift_val;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    s += coeff_term_str(coeffs_[i], shift_ + static_cast<long>(i), first);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(long value) : num_(value) {}
RatFunc::RatFunc(BigInt value) : num_(std::move(value)) {}
RatFunc::RatFunc(const BigRat& value)
    : RatFunc(LaurentPoly(BigInt(value.get_num())), LaurentPoly(BigInt(value.get_den()))) {}
RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = 1;
    return;
  }
  long net_shift = num.low_degree() - den.low_degree();
  // Split each side into sign * content * primitive part, cancel the primitive
  // gcd and the content gcd, put the sign on the numerator.
  BigInt cn = content(num.coeffs()), cd = content(den.coeffs());
  int sign = (num.coeffs().back() < 0) == (den.coeffs().back() < 0) ? 1 : -1;
  Poly np = primitive(num.coeffs());
  Poly dp = primitive(den.coeffs());
  Poly g = pgcd(np, dp);
  if (pdeg(g) >= 1) {
    np = *pdiv_exact(np, g);  // exact over Z by Gauss's lemma
    dp = *pdiv_exact(dp, g);
  }
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  mpz_divexact(cn.get_mpz_t(), cn.get_mpz_t(), cg.get_mpz_t());
  mpz_divexact(cd.get_mpz_t(), cd.get_mpz_t(), cg.get_mpz_t());
  Poly n = pscale(np, sign > 0 ? cn : -cn);
  Poly d = pscale(dp, cd);
  num_ = LaurentPoly(net_shift, std::move(n));
  den_ = LaurentPoly(0, std::move(d));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return RatFunc();
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(1);
  RatFunc base = e < 0 ? inverse() : *this;
  RatFunc r(1);
  for (long i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

BigRat RatFunc::eval(const BigRat& p) const {
  if (p == 0) throw PoleError("evaluation at q = 0");
  BigRat d = den_.eval(p);
  if (d == 0) throw PoleError("evaluation at a pole, q = " +
                              static_cast<std::string>(p.get_str()));
  return num_.eval(p) / d;
}

std::string RatFunc::str() const {
  if (is_zero()) return "0";
  if (den_.is_one()) return num_.str();
  auto wrap = [](const LaurentPoly& p) {
    std::string s = p.str();
    bool multi = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos ||
                 (s.size() > 1 && s[0] == '-');
    return multi ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

RatFunc rf_q() { return RatFunc::q_pow(1); }
RatFunc rf_qinv() { return RatFunc::q_pow(-1); }
RatFunc rf_qplus() { return rf_q() + rf_qinv(); }
RatFunc rf_qminus() { return rf_q() - rf_qinv(); }

// ---------------------------------------------------------------------------
// factor_report

LaurentPoly cyclotomic(int n) {
  if (n < 1 || n > 12) throw ZeroArgument("cyclotomic order out of range [1,12]");
  return LaurentPoly(0, kCyclotomic[n]);
}

bool FactorReport::only_cyclotomic(const std::vector<int>& orders) const {
  auto side_ok = [&](const std::vector<Factor>& fs) {
    for (const auto& f : fs) {
      if (f.is_q) continue;
      if (f.cyclotomic_order == 0) return false;
      if (std::find(orders.begin(), orders.end(), f.cyclotomic_order) == orders.end())
        return false;
    }
    return true;
  };
  return side_ok(num_factors) && side_ok(den_factors);
}

std::string FactorReport::str() const {
  auto side = [](const BigInt& cont, const std::vector<Factor>& fs) {
    std::string s = cont.get_str();
    for (const auto& f : fs) {
      s += " * (" + f.poly.str() + ")";
      if (f.multiplicity != 1) s += "^" + std::to_string(f.multiplicity);
      if (f.cyclotomic_order) s += "[Phi" + std::to_string(f.cyclotomic_order) + "]";
      else if (f.is_q) s += "[q]";
      else if (!f.certified_irreducible) s += "[?]";
    }
    return s;
  };
  return side(num_content, num_factors) + (den_factors.empty() && den_content == 1
                                               ? ""
                                               : " / " + side(den_content, den_factors));
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.is_zero() ? LaurentPoly() : LaurentPoly(0, primitive(b.coeffs()));
  if (b.is_zero()) return LaurentPoly(0, primitive(a.coeffs()));
  return LaurentPoly(0, pgcd(a.coeffs(), b.coeffs()));
}

LaurentPoly laurent_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  // lcm over Z[q]: lcm of the integer contents times the lcm of the
  // primitive parts (shifts are units and are dropped)
  LaurentPoly g = laurent_gcd(a, b);
  LaurentPoly prod(0, pmul(primitive(a.coeffs()), primitive(b.coeffs())));
  auto quot = prod.divide_exact(g);
  if (!quot) throw std::logic_error("laurent_lcm: inexact division by the gcd");
  BigInt ca = content(a.coeffs()), cb = content(b.coeffs()), cg, cl;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  mpz_divexact(cl.get_mpz_t(), ca.get_mpz_t(), cg.get_mpz_t());
  cl *= cb;
  return *quot * LaurentPoly(cl);
}

BigInt laurent_content(const LaurentPoly& a) { return content(a.coeffs()); }

FactorReport factor_report(const RatFunc& f) {
  if (f.is_zero()) throw ZeroArgument("factor_report of zero");
  FactorReport rep;
  long shift = f.num().low_degree();
  if (shift != 0) {
    Factor fq;
    fq.poly = LaurentPoly::q_pow(1);
    fq.is_q = true;
    fq.multiplicity = static_cast<int>(std::abs(shift));
    (shift > 0 ? rep.num_factors : rep.den_factors).push_back(fq);
  }
  factor_side(f.num().coeffs(), &rep.num_content, &rep.num_factors);
  factor_side(f.den().coeffs(), &rep.den_content, &rep.den_factors);
  return rep;
}

}  // namespace qaw
