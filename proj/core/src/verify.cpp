#include "qaw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace qaw {

bool glob_match(const std::string& pattern, const std::string& name) {
  size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace sampling {

Word random_word(uint64_t seed, size_t max_len) {
  std::mt19937_64 rng(seed);
  size_t len = 1 + rng() % max_len;
  std::string s;
  for (size_t i = 0; i < len; ++i) s += "ABC"[rng() % 3];
  return Word(s);
}

LieTreePtr random_tree(uint64_t seed, int max_len) {
  std::mt19937_64 rng(seed);
  std::function<LieTreePtr(int)> gen = [&](int len) -> LieTreePtr {
    if (len == 1) return LieTree::leaf("ABC"[rng() % 3]);
    int split = 1 + static_cast<int>(rng() % static_cast<uint64_t>(len - 1));
    return LieTree::node(gen(split), gen(len - split));
  };
  int len = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_len));
  return gen(len);
}

RatFunc random_scalar(uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto poly = [&](bool nonzero) {
    std::vector<BigInt> c(1 + rng() % 3);
    for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
    LaurentPoly p(static_cast<long>(rng() % 5) - 2, c);
    if (nonzero && p.is_zero()) p = LaurentPoly::q_pow(static_cast<long>(rng() % 3) - 1);
    return p;
  };
  return RatFunc(poly(false), poly(true));
}

UawElement random_uaw(uint64_t seed, uint32_t max_degree, size_t terms) {
  std::mt19937_64 rng(seed);
  UawElement x;
  for (size_t i = 0; i < terms; ++i) {
    NormalWord w;
    uint32_t budget = rng() % (max_degree + 1);
    uint32_t* slots[6] = {&w.i, &w.j, &w.k, &w.r, &w.s, &w.t};
    while (budget--) ++*slots[rng() % 6];
    x.add_term(w, random_scalar(rng()));
  }
  return x;
}

FreeElement random_free(uint64_t seed, size_t max_len, size_t terms) {
  std::mt19937_64 rng(seed);
  FreeElement f;
  for (size_t i = 0; i < terms; ++i) f.add_term(random_word(rng(), max_len), random_scalar(rng()));
  return f;
}

std::string random_expr_text(uint64_t seed, int max_depth) {
  std::mt19937_64 rng(seed);
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    if (depth <= 0) {
      switch (rng() % 8) {
        case 0: return std::to_string(rng() % 9);
        case 1: return "q";
        case 2: return "q^" + std::to_string(static_cast<long>(rng() % 7) - 3);
        case 3: return "al";
        case 4: return "be";
        case 5: return "ga";
        case 6: return "H" + std::to_string(1 + rng() % 32);
        default: return std::string(1, "ABC"[rng() % 3]);
      }
    }
    switch (rng() % 6) {
      case 0: return "(" + gen(depth - 1) + " + " + gen(depth - 1) + ")";
      case 1: return "(" + gen(depth - 1) + " - " + gen(depth - 1) + ")";
      case 2: return gen(depth - 1) + "*" + gen(depth - 1);
      case 3: return "[" + gen(depth - 1) + "," + gen(depth - 1) + "]";
      case 4: return "(" + gen(depth - 1) + ")^" + std::to_string(rng() % 3);
      default: return gen(depth - 1) + " " + gen(0);
    }
  };
  return gen(max_depth);
}

}  // namespace sampling

// ---------------------------------------------------------------------------

struct Verifier::Context {
  Uaw uaw;
  HallBasis hb{6};

  RatFunc q = rf_q(), qi = rf_qinv(), qp = rf_qplus(), qm = rf_qminus();

  std::vector<UawElement> stdmon_cache = std::vector<UawElement>(81);
  std::vector<bool> stdmon_have = std::vector<bool>(81, false);

  const UawElement& stdmon(int n) {
    if (!stdmon_have[static_cast<size_t>(n)]) {
      stdmon_cache[static_cast<size_t>(n)] = uaw.reduce(hb.expansion(n));
      stdmon_have[static_cast<size_t>(n)] = true;
    }
    return stdmon_cache[static_cast<size_t>(n)];
  }

  /// Image in Delta of the left-normed bracketing of a word.
  UawElement dLN(const std::string& word) {
    return uaw.reduce(expand(*LieTree::left_normed(Word(word))));
  }

  UawElement nfw(uint32_t i, uint32_t j, uint32_t k) {
    return UawElement::term({i, j, k, 0, 0, 0});
  }

  static bool in_filtration(const UawElement& x, uint32_t n) {
    return x.is_zero() || Uaw::filtration_degree(x) <= n;
  }

  // memoized eliminations for the rank checks / pivot report
  std::optional<Elimination> l4_elim, l5_elim, l5_retained_elim;

  const Elimination& l4() {
    if (!l4_elim) {
      std::vector<OmegaElement> vecs;
      for (int n = 1; n <= 32; ++n) vecs.push_back(uaw.to_omega_basis(stdmon(n)));
      auto basis = basis_from_support(vecs, [](const OmegaWord& a, const OmegaWord& b) { return b < a; },
                                      OmegaWord{});
      l4_elim = bareiss(expansion_matrix(vecs, basis));
    }
    return *l4_elim;
  }

  ExactMatrix monomial_matrix(const std::vector<int>& skip) {
    std::vector<UawElement> vecs;
    for (int n = 1; n <= 80; ++n) {
      if (std::find(skip.begin(), skip.end(), n) != skip.end()) continue;
      vecs.push_back(stdmon(n));
    }
    auto basis = basis_from_support(vecs, [](const NormalWord& a, const NormalWord& b) { return b < a; },
                                    NormalWord{});
    return expansion_matrix(vecs, basis);
  }

  const Elimination& l5() {
    if (!l5_elim) l5_elim = bareiss(monomial_matrix({}));
    return *l5_elim;
  }

  const Elimination& l5_retained() {
    if (!l5_retained_elim) l5_retained_elim = bareiss(monomial_matrix({44, 69, 74, 79}));
    return *l5_retained_elim;
  }

  // the span-membership family: the n=4, m=0 independent list together with
  // the six length-4 replacement monomials H20, H22, H25, H27, H30, H31
  std::vector<UawElement> span_family() {
    std::vector<UawElement> fam;
    fam.push_back(UawElement::one());
    fam.push_back(uaw.A());
    fam.push_back(uaw.B());
    fam.push_back(uaw.C());
    for (int n : {10, 12, 18, 24, 32, 36, 38, 45, 46, 51, 72}) fam.push_back(stdmon(n));
    for (int i = 1; i <= 4; ++i) {
      std::string ai(static_cast<size_t>(i), 'A'), bi(static_cast<size_t>(i), 'B'),
          ci(static_cast<size_t>(i), 'C');
      fam.push_back(dLN("B" + ai));
      fam.push_back(dLN("C" + ai));
      fam.push_back(dLN("C" + bi));
      fam.push_back(dLN("BA" + bi));
      fam.push_back(dLN("CA" + ci));
      fam.push_back(dLN("CB" + ci));
      fam.push_back(dLN("BAA" + bi));
      fam.push_back(dLN("CAA" + ci));
      fam.push_back(dLN("CBB" + ci));
      fam.push_back(dLN("BAAA" + bi));
      fam.push_back(dLN("CAAA" + ci));
      fam.push_back(dLN("CBBB" + ci));
    }
    for (int n : {20, 22, 25, 27, 30, 31}) fam.push_back(stdmon(n));
    return fam;
  }

  /// Exact span membership over the normal-word basis, batched over targets.
  std::vector<bool> in_span_many(const std::vector<UawElement>& targets,
                                 const std::vector<UawElement>& family) {
    std::vector<UawElement> all = family;
    for (const auto& t : targets) all.push_back(t);
    auto basis = basis_from_support(all, std::less<NormalWord>{}, NormalWord{});
    ExactMatrix m = expansion_matrix(family, basis);
    std::vector<std::vector<RatFunc>> rhs;
    for (const auto& target : targets) {
      std::vector<RatFunc> t(static_cast<size_t>(basis.size()));
      for (const auto& [w, c] : target.terms()) t[static_cast<size_t>(*basis.find(w))] = c;
      rhs.push_back(std::move(t));
    }
    auto sols = solve_coords_many(m, rhs);
    std::vector<bool> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(s.has_value());
    return out;
  }

  bool in_span(const UawElement& target, const std::vector<UawElement>& family) {
    return in_span_many({target}, family)[0];
  }

  /// Commutative image of a free-algebra element (letters to bars directly).
  static CommPoly psi_free(const FreeElement& f) {
    CommPoly out;
    for (const auto& [w, c] : f.terms())
      out.add_term({static_cast<uint32_t>(w.count('A')), static_cast<uint32_t>(w.count('B')),
                    static_cast<uint32_t>(w.count('C'))},
                   c);
    return out;
  }
};

namespace {

using Ctx = Verifier::Context;

std::string shorten(std::string s, size_t cap = 400) {
  if (s.size() > cap) s = s.substr(0, cap) + "...";
  return s;
}

bool expect_zero_free(const FreeElement& diff, std::string* witness, const char* label) {
  if (diff.is_zero()) return true;
  *witness = std::string(label) + " residual: " + shorten(diff.str());
  return false;
}

bool expect_zero(const UawElement& diff, std::string* witness, const char* label) {
  if (diff.is_zero()) return true;
  *witness = std::string(label) + " residual: " + shorten(diff.str());
  return false;
}

bool expect_filt(Ctx& c, const UawElement& x, uint32_t n, std::string* witness, const char* label) {
  if (Ctx::in_filtration(x, n)) return true;
  *witness = std::string(label) + ": filtration degree " +
             std::to_string(Uaw::filtration_degree(x)) + " > " + std::to_string(n) + ": " +
             shorten(x.str());
  (void)c;
  return false;
}

long param(const Params& p, const std::string& name, long lo, long hi) {
  auto it = p.find(name);
  if (it == p.end()) throw BadParams("missing parameter " + name);
  if (it->second < lo || it->second > hi)
    throw BadParams("parameter " + name + " out of range [" + std::to_string(lo) + "," +
                    std::to_string(hi) + "]");
  return it->second;
}

long param_or(const Params& p, const std::string& name, long dflt, long lo, long hi) {
  if (p.find(name) == p.end()) return dflt;
  return param(p, name, lo, hi);
}

// ------------------------- individual checks -------------------------------

bool chk_theta_r_nonzero(Ctx&, const Params&, std::string* w) {
  for (int i = 0; i < 9; ++i) {
    FreeElement r = Uaw::r_free(i);
    if ((theta(r) + r).is_zero()) {
      *w = "theta(r_" + std::to_string(i) + ") = -r_" + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool chk_free_BA(Ctx& c, const Params&, std::string* w) {
  FreeElement lhs = c.hb.expansion(4) * (c.q * c.qm).inverse() -
                    FreeElement::letter('C') * c.qp;
  FreeElement rhs = FreeElement::letter('A') * FreeElement::letter('B') - Uaw::gamma_free();
  return expect_zero_free(lhs - rhs, w, "[BA]/(q(q-q^-1)) - (q+q^-1)C = AB - gamma");
}

bool chk_free_CA(Ctx& c, const Params&, std::string* w) {
  // CA analogue; the leading sign follows the (-1)^i of the [CA^i] family
  FreeElement lhs = c.hb.expansion(5) * (c.qi * c.qm).inverse() +
                    FreeElement::letter('B') * c.qp;
  FreeElement rhs = Uaw::beta_free() - FreeElement::letter('A') * FreeElement::letter('C');
  return expect_zero_free(lhs - rhs, w, "[CA]/(q^-1(q-q^-1)) + (q+q^-1)B = beta - AC");
}

bool chk_free_BAA(Ctx& c, const Params&, std::string* w) {
  FreeElement A = FreeElement::letter('A'), C = FreeElement::letter('C');
  FreeElement lhs = c.hb.expansion(7) * (c.q * c.q * c.qm * c.qm).inverse() -
                    c.hb.expansion(5) * (c.qp / (c.q * c.qm));
  FreeElement rhs = A * A * FreeElement::letter('B') + A * C * c.qp - A * Uaw::gamma_free() +
                    Uaw::r_free(5) * (c.q * c.qm).inverse();
  return expect_zero_free(lhs - rhs, w, "[BAA] identity");
}

bool chk_free_BAC(Ctx& c, const Params&, std::string* w) {
  FreeElement A = FreeElement::letter('A'), B = FreeElement::letter('B');
  FreeElement lhs = c.hb.expansion(12) * (c.qp * c.qm * c.qm).inverse();
  FreeElement rhs = B * B - A * A +
                    (A * Uaw::alpha_free() - B * Uaw::beta_free() + Uaw::r_free(1)) * c.qp.inverse() +
                    Uaw::r_free(2) * (c.q / (c.q * c.q - c.qi * c.qi));
  return expect_zero_free(lhs - rhs, w, "[BAC] identity (with the r_2 term)");
}

FreeElement h0_free(Ctx& c) {
  return (c.hb.expansion(31) - c.hb.expansion(24)) * (c.qp * c.qp * c.qm * c.qm).inverse() +
         c.hb.expansion(7) * c.qm.inverse() - c.hb.expansion(5) * RatFunc(2);
}

bool chk_free_H4alpha(Ctx& c, const Params&, std::string* w) {
  FreeElement A = FreeElement::letter('A'), B = FreeElement::letter('B');
  FreeElement lhs = c.hb.expansion(4) * Uaw::alpha_free() * (c.qp * c.qp).inverse();
  FreeElement rhs = h0_free(c) +
                    (Uaw::r_free(1) * B - A * Uaw::r_free(3)) * (c.qp * c.qp).inverse() -
                    Uaw::r_free(5) * (RatFunc(2) / c.qp) +
                    lie_bracket(Uaw::r_free(2), B) * (c.q / (c.qp * c.qp * c.qm));
  return expect_zero_free(lhs - rhs, w, "[BA]alpha certificate");
}

bool chk_free_I0(Ctx& c, const Params&, std::string* w) {
  FreeElement A = FreeElement::letter('A'), B = FreeElement::letter('B');
  FreeElement h4 = c.hb.expansion(4);
  FreeElement i0 = lie_bracket(h0_free(c), h4);
  FreeElement rhs =
      h4 * (lie_bracket(Uaw::r_free(0), B) - lie_bracket(Uaw::r_free(3), A)) *
          (c.qp * c.qp).inverse() +
      lie_bracket(A * Uaw::r_free(3) - Uaw::r_free(1) * B, h4) * (c.qp * c.qp).inverse() +
      lie_bracket(Uaw::r_free(5), h4) * (RatFunc(2) / c.qp) -
      lie_bracket(lie_bracket(Uaw::r_free(2), B), h4) * (c.q / (c.qp * c.qp * c.qm));
  return expect_zero_free(i0 - rhs, w, "I0 certificate via r_0, r_1, r_2, r_3, r_5");
}

bool chk_I0_in_ideal(Ctx& c, const Params&, std::string* w) {
  FreeElement i0 = lie_bracket(h0_free(c), c.hb.expansion(4));
  return expect_zero(c.uaw.reduce(i0), w, "I0 in Delta");
}

bool chk_I0_nonzero_hall(Ctx& c, const Params&, std::string* w) {
  c.hb.ensure(6);
  FreeElement h4 = c.hb.expansion(4);
  FreeElement i0 = lie_bracket(h0_free(c), h4);
  // expected support: [H31,H4], [H24,H4], H57, H30
  auto idx_of_pair = [&](int a, int b) {
    LieSeries s = c.hb.bracket(a, b);
    if (s.terms().size() != 1) return -1;
    return s.terms().begin()->first;
  };
  int i31 = idx_of_pair(31, 4), i24 = idx_of_pair(24, 4);
  if (i31 < 0 || i24 < 0) {
    *w = "[H31,H4] or [H24,H4] is not a Hall element";
    return false;
  }
  RatFunc c6 = (c.qp * c.qp * c.qm * c.qm).inverse();
  LieSeries expect;
  expect.add_term(i31, c6);
  expect.add_term(i24, -c6);
  expect.add_term(57, c.qm.inverse());
  expect.add_term(30, RatFunc(-2));
  // route 1: rewriting
  LieSeries via_rewrite = c.hb.rewrite({{RatFunc(1), LieTree::node(c.hb.tree(31), c.hb.tree(4))},
                                        {RatFunc(-1), LieTree::node(c.hb.tree(24), c.hb.tree(4))}});
  via_rewrite = via_rewrite * c6 +
                c.hb.bracket(7, 4) * c.qm.inverse() + c.hb.bracket(5, 4) * RatFunc(-2);
  // route 2: the independent linear-algebra oracle
  auto via_solve = c.hb.coords_by_solve(i0);
  if (!via_solve) {
    *w = "I0 is not in the free Lie algebra?";
    return false;
  }
  if (!(via_rewrite == expect)) {
    *w = "rewrite route: " + via_rewrite.str() + " expected " + expect.str();
    return false;
  }
  if (!(*via_solve == expect)) {
    *w = "solve route: " + via_solve->str() + " expected " + expect.str();
    return false;
  }
  if (c.hb.realize(expect) == i0) return true;
  *w = "realized series does not equal I0";
  return false;
}

bool chk_casimir(Ctx& c, const Params&, std::string* w) {
  const UawElement& om = c.uaw.omega();
  for (int n = 1; n < 6; ++n)
    if (!(c.uaw.omega_form(n) == om)) {
      *w = "form " + std::to_string(n) + ": " + shorten(c.uaw.omega_form(n).str());
      return false;
    }
  if (Uaw::filtration_degree(om) != 3) {
    *w = "Omega filtration degree != 3";
    return false;
  }
  for (auto g : {c.uaw.A(), c.uaw.B(), c.uaw.C()})
    if (!c.uaw.bracket(g, om).is_zero()) {
      *w = "Omega is not central";
      return false;
    }
  return true;
}

bool chk_confluence(Ctx&, const Params& p, std::string* w) {
  long count = param_or(p, "count", 200, 1, 100000);
  long maxlen = param_or(p, "maxlen", 8, 1, 10);
  Uaw left(ReductionRules::standard(), Uaw::Strategy::LeftmostInversion);
  Uaw right(ReductionRules::standard(), Uaw::Strategy::RightmostInversion);
  for (long i = 0; i < count; ++i) {
    Word word = sampling::random_word(0xC0FFEE + static_cast<uint64_t>(i),
                                      static_cast<size_t>(maxlen));
    if (!(left.reduce_word(word.letters()) == right.reduce_word(word.letters()))) {
      *w = "strategies disagree on " + word.str();
      return false;
    }
  }
  return true;
}

bool chk_assoc(Ctx& c, const Params& p, std::string* w) {
  long count = param_or(p, "count", 100, 1, 100000);
  for (long i = 0; i < count; ++i) {
    uint64_t s = 0xA550C + static_cast<uint64_t>(i);
    UawElement x = c.uaw.reduce(sampling::random_word(s * 3 + 0, 2));
    UawElement y = c.uaw.reduce(sampling::random_word(s * 3 + 1, 2));
    UawElement z = c.uaw.reduce(sampling::random_word(s * 3 + 2, 2));
    if (!(c.uaw.mul(c.uaw.mul(x, y), z) == c.uaw.mul(x, c.uaw.mul(y, z)))) {
      *w = "associativity fails at sample " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool chk_filtration_two_gen(Ctx& c, const Params& p, std::string* w) {
  uint32_t i = static_cast<uint32_t>(param(p, "i", 1, 8));
  std::string ai(i, 'A'), bi(i, 'B');
  RatFunc qmi = c.qm.pow(i);
  if (!expect_filt(c, c.dLN("B" + ai) - c.nfw(i, 1, 0) * (c.q.pow(i) * qmi), i, w, "[BA^i]"))
    return false;
  RatFunc sgn = i % 2 ? RatFunc(-1) : RatFunc(1);
  if (!expect_filt(c, c.dLN("C" + ai) - c.nfw(i, 0, 1) * (sgn * c.qi.pow(i) * qmi), i, w, "[CA^i]"))
    return false;
  return expect_filt(c, c.dLN("C" + bi) - c.nfw(0, i, 1) * (c.q.pow(i) * qmi), i, w, "[CB^j]");
}

bool chk_filtration_ad_abc(Ctx& c, const Params& p, std::string* w) {
  uint32_t i = static_cast<uint32_t>(param(p, "i", 1, 8));
  uint32_t j = static_cast<uint32_t>(param(p, "j", 1, 8));
  uint32_t k = static_cast<uint32_t>(param(p, "k", 1, 8));
  uint32_t n = i + j + k;
  UawElement word = c.nfw(i, j, k);
  RatFunc one(1);
  if (!expect_filt(c,
                   c.uaw.bracket(c.uaw.A(), word) -
                       c.nfw(i + 1, j, k) * (one - c.q.pow(2 * (long(j) - long(k)))),
                   n, w, "[A, A^iB^jC^k]"))
    return false;
  if (!expect_filt(c,
                   c.uaw.bracket(c.uaw.B(), word) -
                       c.nfw(i, j + 1, k) * (c.q.pow(2 * long(i)) - c.q.pow(2 * long(k))),
                   n, w, "[B, A^iB^jC^k]"))
    return false;
  return expect_filt(c,
                     c.uaw.bracket(c.uaw.C(), word) -
                         c.nfw(i, j, k + 1) * (c.q.pow(2 * (long(j) - long(i))) - one),
                     n, w, "[C, A^iB^jC^k]");
}

bool chk_filtration_mixed(Ctx& c, const Params& p, std::string* w) {
  uint32_t i = static_cast<uint32_t>(param(p, "i", 1, 8));
  uint32_t j = static_cast<uint32_t>(param(p, "j", 1, 8));
  uint32_t k = static_cast<uint32_t>(param(p, "k", 1, 8));
  auto sgn = [](uint32_t e) { return e % 2 ? RatFunc(-1) : RatFunc(1); };
  RatFunc q2i1 = c.q.pow(2 * long(i)) - RatFunc(1);
  std::string ai(i, 'A'), bj(j, 'B'), ck(k, 'C');
  // two-generator families
  if (!expect_filt(c,
                   c.dLN("B" + ai + bj) -
                       c.nfw(i, j + 1, 0) * (sgn(j) * c.q.pow(i) * q2i1.pow(j) * c.qm.pow(i)),
                   i + j, w, "[BA^iB^j]"))
    return false;
  if (!expect_filt(c,
                   c.dLN("C" + ai + ck) -
                       c.nfw(i, 0, k + 1) *
                           (sgn(i) * c.q.pow(-long(i) * (2 * long(k) + 1)) * q2i1.pow(k) *
                            c.qm.pow(i)),
                   i + k, w, "[CA^iC^k]"))
    return false;
  RatFunc q2j1 = c.q.pow(2 * long(j)) - RatFunc(1);
  if (!expect_filt(c,
                   c.dLN("C" + bj + ck) -
                       c.nfw(0, j, k + 1) * (sgn(k) * c.q.pow(j) * q2j1.pow(k) * c.qm.pow(j)),
                   j + k, w, "[CB^jC^k]"))
    return false;
  // Omega-producing families; the CA families need i >= 2
  {
    UawElement lead = c.uaw.mul(c.nfw(0, j, k - 1),
                                c.uaw.omega() * (sgn(j + k) * c.q.pow(-long(j)) * q2j1.pow(k) *
                                                 c.qm.pow(j + 1)));
    if (!expect_filt(c, c.dLN("BA" + bj + ck) - lead, j + k + 1, w, "[BAB^jC^k]")) return false;
  }
  uint32_t i2 = std::max<uint32_t>(i, 2);
  std::string ai2(i2, 'A');
  RatFunc q2i21 = c.q.pow(2 * (long(i2) - 1)) - RatFunc(1);
  {
    UawElement lead = c.uaw.mul(c.nfw(i2 - 1, j - 1, 0),
                                c.uaw.omega() * (sgn(i2 + j) * c.q.pow(1 - long(i2)) *
                                                 q2i21.pow(j) * c.qm.pow(i2)));
    if (!expect_filt(c, c.dLN("C" + ai2 + bj) - lead, i2 + j, w, "[CA^iB^j]")) return false;
  }
  {
    UawElement lead = c.uaw.mul(
        c.nfw(i2 - 1, 0, k),
        c.uaw.omega() * (sgn(i2 + 1) * c.q.pow((1 - long(i2)) * (1 + 2 * long(k))) *
                         q2i21.pow(k + 1) * c.qm.pow(i2)));
    if (!expect_filt(c, c.dLN("C" + ai2 + "B" + ck) - lead, i2 + k + 1, w, "[CA^iBC^k]"))
      return false;
  }
  return true;
}

bool chk_complement(Ctx& c, const Params&, std::string* w) {
  UawElement lhs12 = c.stdmon(12) * (c.qp * c.qm * c.qm).inverse();
  UawElement rhs12 = c.nfw(0, 2, 0) - c.nfw(2, 0, 0) +
                     (c.uaw.mul(c.uaw.A(), c.uaw.alpha()) - c.uaw.mul(c.uaw.B(), c.uaw.beta())) *
                         c.qp.inverse();
  if (!expect_zero(lhs12 - rhs12, w, "H12 complement identity")) return false;
  UawElement lhs10 = c.stdmon(10) * (c.qp * c.qm * c.qm).inverse();
  UawElement rhs10 = c.nfw(0, 0, 2) - c.nfw(2, 0, 0) +
                     (c.uaw.mul(c.uaw.A(), c.uaw.alpha()) - c.uaw.mul(c.uaw.C(), c.uaw.gamma())) *
                         c.qp.inverse();
  if (!expect_zero(lhs10 - rhs10, w, "H10 complement identity")) return false;
  for (int n : {10, 12})
    for (const auto& [word, coeff] : c.stdmon(n).terms())
      if (word.degree() != 2) {
        *w = "H" + std::to_string(n) + " has a term outside the degree-2 complement";
        return false;
      }
  return true;
}

bool chk_omega_leading(Ctx& c, const Params&, std::string* w) {
  RatFunc qm3 = c.qm.pow(3);
  if (!expect_filt(c, c.stdmon(18) + c.uaw.mul(c.uaw.A(), c.uaw.omega()) * qm3, 3, w,
                   "[CA^2B] + (q-q^-1)^3 A Omega"))
    return false;
  if (!expect_filt(c, c.stdmon(24) - c.uaw.mul(c.uaw.B(), c.uaw.omega()) * qm3, 3, w,
                   "[BABC] - (q-q^-1)^3 B Omega"))
    return false;
  return expect_filt(c, c.stdmon(32) - c.uaw.mul(c.uaw.C(), c.uaw.omega()) * qm3, 3, w,
                     "[[C,B],[C,A]] - (q-q^-1)^3 C Omega");
}

bool chk_delta_six(Ctx& c, const Params&, std::string* w) {
  RatFunc qp2 = c.qp * c.qp;
  RatFunc c4 = (qp2 * c.qm * c.qm).inverse();  // 1/((q+q^-1)^2 (q-q^-1)^2)
  auto mul_c = [&](int n, const UawElement& central) { return c.uaw.mul(c.stdmon(n), central); };
  struct Item {
    UawElement lhs;
    UawElement rhs;
    const char* label;
  };
  std::vector<Item> items;
  items.push_back({mul_c(4, c.uaw.alpha()) * qp2.inverse(),
                   (c.stdmon(31) - c.stdmon(24)) * c4 + c.stdmon(7) * c.qm.inverse() -
                       c.stdmon(5) * RatFunc(2),
                   "[BA]alpha"});
  items.push_back({mul_c(6, c.uaw.beta()) * qp2.inverse(),
                   (c.stdmon(27) - c.stdmon(25)) * c4 + c.stdmon(11) * c.qm.inverse() +
                       c.stdmon(4) * RatFunc(2),
                   "[CB]beta"});
  items.push_back({mul_c(5, c.uaw.gamma()) * qp2.inverse(),
                   (c.stdmon(30) + c.stdmon(18)) * -c4 + c.stdmon(13) * c.qm.inverse() -
                       c.stdmon(6) * RatFunc(2),
                   "[CA]gamma"});
  items.push_back({mul_c(4, c.uaw.beta()) * qp2.inverse(),
                   (c.stdmon(30) - c.stdmon(22)) * c4 - c.stdmon(9) * c.qm.inverse() +
                       c.stdmon(6) * RatFunc(2),
                   "[BA]beta"});
  items.push_back({mul_c(6, c.uaw.gamma()) * qp2.inverse(),
                   (c.stdmon(24) - c.stdmon(31) - c.stdmon(20)) * c4 -
                       c.stdmon(14) * c.qm.inverse() - c.stdmon(5) * RatFunc(2),
                   "[CB]gamma"});
  items.push_back({mul_c(5, c.uaw.alpha()) * qp2.inverse(),
                   c.stdmon(25) * -c4 - c.stdmon(8) * c.qm.inverse() - c.stdmon(4) * RatFunc(2),
                   "[CA]alpha"});
  for (const auto& item : items)
    if (!expect_zero(item.lhs - item.rhs, w, item.label)) return false;
  return true;
}

bool chk_aux_independence(Ctx& c, const Params& p, std::string* w) {
  long n = param(p, "n", 1, 4);
  long m = param_or(p, "m", 0, 0, 2);
  std::vector<UawElement> base;
  base.push_back(UawElement::one());
  base.push_back(c.uaw.A());
  base.push_back(c.uaw.B());
  base.push_back(c.uaw.C());
  for (int v : {10, 12, 18, 24, 32}) base.push_back(c.stdmon(v));
  for (long i = 1; i <= n; ++i) {
    std::string ai(static_cast<size_t>(i), 'A'), bi(static_cast<size_t>(i), 'B'),
        ci(static_cast<size_t>(i), 'C');
    base.push_back(c.dLN("B" + ai));
    base.push_back(c.dLN("C" + ai));
    base.push_back(c.dLN("C" + bi));
    base.push_back(c.dLN("BA" + bi));
    base.push_back(c.dLN("CA" + ci));
    base.push_back(c.dLN("CB" + ci));
    base.push_back(c.dLN("BAA" + bi));
    base.push_back(c.dLN("CAA" + ci));
    base.push_back(c.dLN("CBB" + ci));
  }
  std::vector<UawElement> fam;
  for (uint32_t r = 0; r <= static_cast<uint32_t>(m); ++r)
    for (uint32_t s = 0; r + s <= static_cast<uint32_t>(m); ++s)
      for (uint32_t t = 0; r + s + t <= static_cast<uint32_t>(m); ++t) {
        UawElement greek = UawElement::term({0, 0, 0, r, s, t});
        for (const auto& x : base) fam.push_back(c.uaw.mul(x, greek));
      }
  auto basis = basis_from_support(fam, [](const NormalWord& a, const NormalWord& b) { return b < a; },
                                  NormalWord{});
  int rank = bareiss(expansion_matrix(fam, basis)).rank;
  if (rank == static_cast<int>(fam.size())) return true;
  *w = "rank " + std::to_string(rank) + " of " + std::to_string(fam.size()) + " vectors";
  return false;
}

bool chk_seven_H5b_H6a(Ctx& c, const Params&, std::string* w) {
  RatFunc qm2 = c.qm * c.qm, qm3 = c.qm.pow(3), qp2 = c.qp * c.qp;
  UawElement lhs1 = c.uaw.mul(c.stdmon(5), c.uaw.beta()) + c.uaw.mul(c.stdmon(4), c.uaw.gamma());
  UawElement rhs1 = (c.stdmon(58) - c.stdmon(65)) * qm3.inverse() -
                    (c.stdmon(23) + c.stdmon(17)) * qm2.inverse() -
                    (c.stdmon(12) - c.stdmon(10)) * (qp2 / c.qm);
  if (!expect_zero(lhs1 - rhs1, w, "[CA]beta + [BA]gamma")) return false;
  UawElement lhs2 = c.uaw.mul(c.stdmon(6), c.uaw.alpha()) - c.uaw.mul(c.stdmon(4), c.uaw.gamma());
  UawElement rhs2 = (c.stdmon(61) - c.stdmon(75)) * qm3.inverse() -
                    (c.stdmon(26) - c.stdmon(17)) * qm2.inverse() - c.stdmon(10) * (qp2 / c.qm);
  return expect_zero(lhs2 - rhs2, w, "[CB]alpha - [BA]gamma");
}

bool chk_rel5(Ctx& c, const Params&, std::string* w) {
  RatFunc qp2 = c.qp * c.qp;
  RatFunc q2 = c.q * c.q, q4 = q2 * q2;
  RatFunc denom = (RatFunc(2) * q2 * qp2 * c.qm).inverse();  // 1/(2 q^2 (q+q^-1)^2 (q-q^-1))
  RatFunc f1 = (RatFunc(2) * q2 + RatFunc(1)) * (q2 + RatFunc(2));  // (2q^2+1)(q^2+2)
  RatFunc f2 = q4 + RatFunc(3) * q2 + RatFunc(1);                   // q^4+3q^2+1
  // the auxiliary seed identity, with the corrected global sign
  {
    UawElement lhs = c.stdmon(44) * (qp2 * c.qm * c.qm).inverse();
    UawElement rhs = (c.stdmon(27) - c.stdmon(25) * RatFunc(2)) * c.qm.inverse() +
                     (c.stdmon(15) - c.stdmon(19)) * ((q4 + RatFunc(1)) / (q2 * c.qm)) +
                     (c.stdmon(11) - c.stdmon(8)) *
                         (RatFunc(2) * (c.q.pow(6) - RatFunc(1)) / (c.q.pow(3) * c.qm)) -
                     c.uaw.mul(c.stdmon(12), c.uaw.gamma()) * qp2.inverse() -
                     c.uaw.mul(c.stdmon(9), c.uaw.beta()) -
                     c.uaw.mul(c.stdmon(7), c.uaw.alpha());
    if (!expect_zero(lhs - rhs, w, "[BA^2BC] seed identity")) return false;
  }
  // relation 1
  {
    UawElement lhs = c.stdmon(44) * c.qm.inverse();
    UawElement rhs = (c.stdmon(73) + c.stdmon(67)) * (-f1 * denom) +
                     (c.stdmon(62) - c.stdmon(60) * RatFunc(2)) * (-f2 * denom) - c.stdmon(27) +
                     c.stdmon(25) * RatFunc(2) - c.stdmon(19) + c.stdmon(15);
    if (!expect_zero(lhs - rhs, w, "length-5 relation for [BA^2BC]")) return false;
  }
  // relation 2
  {
    UawElement lhs = c.stdmon(69) * (RatFunc(2) * qp2 * c.qm).inverse();
    UawElement rhs = c.stdmon(78) * (-(RatFunc(3) * q4 + RatFunc(5) * q2 + RatFunc(3)) * denom) +
                     c.stdmon(76) * (f2 * denom) +
                     c.stdmon(64) * ((RatFunc(2) * q4 + RatFunc(3) * q2 + RatFunc(2)) * denom) -
                     (c.stdmon(51) - c.stdmon(47)) * c.qm.inverse() + c.stdmon(29) +
                     c.stdmon(22) - c.stdmon(21) + c.stdmon(18);
    if (!expect_zero(lhs - rhs, w, "length-5 relation for [[CB^2],[CA]]")) return false;
  }
  // relation 3
  {
    UawElement lhs = c.stdmon(74) * (RatFunc(2) * qp2 * c.qm).inverse();
    UawElement rhs = (c.stdmon(68) - c.stdmon(70) * RatFunc(2)) * (f2 * denom) +
                     c.stdmon(63) * (f1 * denom) + c.stdmon(45) * c.qm.inverse() -
                     c.stdmon(31) * RatFunc(2) - c.stdmon(28) + c.stdmon(24) * RatFunc(2) -
                     c.stdmon(20) + c.stdmon(16);
    if (!expect_zero(lhs - rhs, w, "length-5 relation for [[CA^2],[CB]]")) return false;
  }
  // relation 4
  {
    UawElement lhs = c.stdmon(79);
    UawElement rhs = -c.stdmon(75) + c.stdmon(72) - c.stdmon(65) + c.stdmon(61) + c.stdmon(58);
    if (!expect_zero(lhs - rhs, w, "length-5 relation for [[CAC],[CB]]")) return false;
  }
  return true;
}

bool chk_L4_rank(Ctx& c, const Params&, std::string* w) {
  int r = c.l4().rank;
  if (r == 32) return true;
  *w = "rank " + std::to_string(r) + " != 32";
  return false;
}

bool chk_L5_rank(Ctx& c, const Params&, std::string* w) {
  int r = c.l5().rank;
  if (r == 76) return true;
  *w = "rank " + std::to_string(r) + " != 76";
  return false;
}

bool chk_L5_basis(Ctx& c, const Params&, std::string* w) {
  int r = c.l5_retained().rank;
  if (r == 76) return true;
  *w = "rank of the 76 retained monomials is " + std::to_string(r);
  return false;
}

bool chk_L5_families(Ctx& c, const Params& p, std::string* w) {
  uint32_t j = static_cast<uint32_t>(param(p, "j", 1, 8));
  uint32_t k = static_cast<uint32_t>(param(p, "k", 1, 8));
  RatFunc qm4 = c.qm.pow(4);
  struct M {
    int idx;
    uint32_t wi, wj, wk;
    RatFunc coeff;
    const char* label;
  };
  const std::vector<M> fixed = {
      {36, 2, 0, 0, c.qp * qm4, "[CA^3B] - (q+q^-1)(q-q^-1)^4 A^2 Om"},
      {38, 1, 1, 0, c.q * qm4, "[CA^2B^2] - q(q-q^-1)^4 AB Om"},
      {45, 1, 0, 1, -(c.qi * qm4), "[CA^2BC] + q^-1(q-q^-1)^4 AC Om"},
      {46, 0, 2, 0, -(c.qp * qm4), "[BAB^2C] + (q+q^-1)(q-q^-1)^4 B^2 Om"},
      {51, 0, 1, 1, -(c.q * qm4), "[BABC^2] + q(q-q^-1)^4 BC Om"},
      {72, 0, 0, 2, -(c.qp * qm4), "[[CBC],[CA]] + (q+q^-1)(q-q^-1)^4 C^2 Om"},
  };
  for (const auto& mrow : fixed) {
    UawElement lead = c.uaw.mul(c.nfw(mrow.wi, mrow.wj, mrow.wk), c.uaw.omega() * mrow.coeff);
    if (!expect_filt(c, c.stdmon(mrow.idx) - lead, 4, w, mrow.label)) return false;
  }
  auto sgn = [](uint32_t e) { return e % 2 ? RatFunc(-1) : RatFunc(1); };
  RatFunc q61 = c.q.pow(6) - RatFunc(1), qm3 = c.qm.pow(3);
  std::string bj(j, 'B'), ck(k, 'C');
  if (!expect_filt(c,
                   c.dLN("BAAA" + bj) -
                       c.nfw(3, j + 1, 0) * (sgn(j) * c.q.pow(3) * q61.pow(j) * qm3),
                   j + 3, w, "[BA^3B^j]"))
    return false;
  if (!expect_filt(c,
                   c.dLN("CAAA" + ck) +
                       c.nfw(3, 0, k + 1) * (c.q.pow(-3 * (2 * long(k) + 1)) * q61.pow(k) * qm3),
                   k + 3, w, "[CA^3C^k]"))
    return false;
  return expect_filt(c,
                     c.dLN("CBBB" + ck) -
                         c.nfw(0, 3, k + 1) * (sgn(k) * c.q.pow(3) * q61.pow(k) * qm3),
                     k + 3, w, "[CB^3C^k]");
}

bool chk_span_replacements(Ctx& c, const Params&, std::string* w) {
  auto fam = c.span_family();
  RatFunc qm2 = c.qm * c.qm, qm3 = c.qm.pow(3), qp2 = c.qp * c.qp;
  RatFunc q61q3 = (c.q.pow(6) - RatFunc(1)) / (c.q.pow(3) * qm3);
  struct T {
    UawElement x;
    const char* label;
  };
  std::vector<T> targets;
  targets.push_back({c.uaw.mul(c.stdmon(13), c.uaw.alpha()) + c.stdmon(52) * qm2.inverse(),
                     "[CAC]alpha + [CABC^2]/(q-q^-1)^2"});
  targets.push_back({c.uaw.mul(c.stdmon(14), c.uaw.beta()) -
                         c.stdmon(54) * qm2.inverse() + c.stdmon(52) * qm2.inverse(),
                     "[CBC]beta - ([BAC^3]-[CABC^2])/(q-q^-1)^2"});
  targets.push_back({c.uaw.mul(c.stdmon(7), c.uaw.gamma()) - c.stdmon(57) * q61q3,
                     "[BA^2]gamma - (q^6-1)[[BA^2],[BA]]/(q^3(q-q^-1)^3)"});
  targets.push_back({c.uaw.mul(c.stdmon(9), c.uaw.gamma()) + c.stdmon(59) * (qp2 / qm2),
                     "[BAB]gamma + (q+q^-1)^2[[BAB],[BA]]/(q-q^-1)^2"});
  targets.push_back({c.uaw.mul(c.stdmon(8), c.uaw.beta()) - c.stdmon(66) * q61q3,
                     "[CA^2]beta - (q^6-1)[[CA^2],[CA]]/(q^3(q-q^-1)^3)"});
  targets.push_back({c.uaw.mul(c.stdmon(13), c.uaw.beta()) + c.stdmon(71) * (qp2 / qm2),
                     "[CAC]beta + (q+q^-1)^2[[CAC],[CA]]/(q-q^-1)^2"});
  targets.push_back({c.uaw.mul(c.stdmon(11), c.uaw.alpha()) - c.stdmon(77) * q61q3,
                     "[CB^2]alpha - (q^6-1)[[CB^2],[CB]]/(q^3(q-q^-1)^3)"});
  targets.push_back({c.uaw.mul(c.stdmon(14), c.uaw.alpha()) + c.stdmon(80) * (qp2 / qm2),
                     "[CBC]alpha + (q+q^-1)^2[[CBC],[CB]]/(q-q^-1)^2"});
  std::vector<UawElement> xs;
  for (const auto& t : targets) xs.push_back(t.x);
  xs.push_back(c.stdmon(44));  // negative control: a dependent monomial
  std::vector<bool> in = c.in_span_many(xs, fam);
  for (size_t i = 0; i < targets.size(); ++i) {
    if (!in[i]) {
      *w = std::string(targets[i].label) + " is not in the span";
      return false;
    }
  }
  if (in.back()) {
    *w = "negative control failed: [BA^2BC] lies in the span";
    return false;
  }
  return true;
}

bool chk_psl2(Ctx& c, const Params&, std::string* w) {
  auto& u = c.uaw;
  std::vector<UawElement> gens = {u.A(), u.B(), u.C(), u.alpha(), u.beta(), u.gamma()};
  for (const auto& g : gens) {
    if (!(u.rho(u.rho(u.rho(g))) == g)) {
      *w = "rho^3 != id on " + g.str();
      return false;
    }
    if (!(u.sigma(u.sigma(g)) == g)) {
      *w = "sigma^2 != id on " + g.str();
      return false;
    }
  }
  if (u.rho(u.A()) == u.A() || u.sigma(u.A()) == u.A()) {
    *w = "action is trivial on A";
    return false;
  }
  UawElement sc = u.C() + u.bracket(u.A(), u.B()) * c.qm.inverse();
  for (int i = 0; i < 9; ++i) {
    if (!u.substitute(Uaw::r_free(i), u.B(), u.C(), u.A()).is_zero()) {
      *w = "rho(r_" + std::to_string(i) + ") != 0";
      return false;
    }
    if (!u.substitute(Uaw::r_free(i), u.B(), u.A(), sc).is_zero()) {
      *w = "sigma(r_" + std::to_string(i) + ") != 0";
      return false;
    }
  }
  if (!(u.rho(u.omega()) == u.omega()) || !(u.sigma(u.omega()) == u.omega())) {
    *w = "Omega is not fixed";
    return false;
  }
  // images of the standard Lie monomials of length <= 3 stay inside L
  std::vector<UawElement> fam;
  for (int n = 1; n <= 80; ++n) fam.push_back(c.stdmon(n));
  std::vector<UawElement> images;
  for (int n = 1; n <= 14; ++n) {
    images.push_back(u.rho(c.stdmon(n)));
    images.push_back(u.sigma(c.stdmon(n)));
  }
  std::vector<bool> in = c.in_span_many(images, fam);
  for (size_t i = 0; i < in.size(); ++i) {
    if (!in[i]) {
      *w = std::string(i % 2 ? "sigma" : "rho") + "(H" + std::to_string(1 + i / 2) +
           ") leaves the span of standard Lie monomials";
      return false;
    }
  }
  return true;
}

bool chk_psi(Ctx& c, const Params&, std::string* w) {
  auto& u = c.uaw;
  for (int i = 0; i < 9; ++i)
    if (!Ctx::psi_free(Uaw::r_free(i)).is_zero()) {
      *w = "psi(r_" + std::to_string(i) + ") != 0";
      return false;
    }
  CommPoly a = CommPoly::term({1, 0, 0}), b = CommPoly::term({0, 1, 0}),
           cc = CommPoly::term({0, 0, 1});
  if (!(u.psi(u.alpha()) == a * c.qp + b * cc)) {
    *w = "psi(alpha) image formula";
    return false;
  }
  if (!(u.psi(u.beta()) == b * c.qp + a * cc)) {
    *w = "psi(beta) image formula";
    return false;
  }
  if (!(u.psi(u.gamma()) == cc * c.qp + a * b)) {
    *w = "psi(gamma) image formula";
    return false;
  }
  // Omega image: -(q+q^-1) abc - a^2 - b^2 - c^2 (sign forced by the six
  // Casimir expressions and the alpha/beta/gamma images)
  CommPoly om_expect = a * b * cc * -c.qp - a * a - b * b - cc * cc;
  if (!(u.psi(u.omega()) == om_expect)) {
    *w = "psi(Omega) = " + u.psi(u.omega()).str();
    return false;
  }
  for (int i = 0; i < 100; ++i) {
    UawElement x = sampling::random_uaw(0x5150 + 2 * static_cast<uint64_t>(i), 3, 2);
    UawElement y = sampling::random_uaw(0x5151 + 2 * static_cast<uint64_t>(i), 3, 2);
    if (!(u.psi(u.mul(x, y)) == u.psi(x) * u.psi(y))) {
      *w = "psi is not multiplicative at sample " + std::to_string(i);
      return false;
    }
  }
  // brackets map to zero
  for (int n = 4; n <= 80; ++n)
    if (!u.psi(c.stdmon(n)).is_zero()) {
      *w = "psi(H" + std::to_string(n) + ") != 0";
      return false;
    }
  // independence of a, b, c and Om^l al^r be^s ga^t with 3l+r+s+t <= 3
  CommPoly al = u.psi(u.alpha()), be = u.psi(u.beta()), ga = u.psi(u.gamma()),
           om = u.psi(u.omega());
  std::vector<CommPoly> fam = {a, b, cc};
  for (uint32_t l = 0; l <= 1; ++l)
    for (uint32_t r = 0; r <= 3; ++r)
      for (uint32_t s = 0; s <= 3; ++s)
        for (uint32_t t = 0; t <= 3; ++t) {
          if (3 * l + r + s + t > 3) continue;
          fam.push_back(om.pow(l) * al.pow(r) * be.pow(s) * ga.pow(t));
        }
  auto basis = basis_from_support(fam, std::less<CommPoly::Mono>{}, CommPoly::Mono{});
  int rank = bareiss(expansion_matrix(fam, basis)).rank;
  if (rank != static_cast<int>(fam.size())) {
    *w = "commutative family rank " + std::to_string(rank) + " of " + std::to_string(fam.size());
    return false;
  }
  return true;
}

bool chk_hall_roundtrip(Ctx& c, const Params& p, std::string* w) {
  long count = param_or(p, "count", 100, 1, 10000);
  long maxdeg = param_or(p, "maxdeg", 6, 1, 7);
  if (c.hb.count_of_length(1) != 3 || c.hb.count_of_length(2) != 3 ||
      c.hb.count_of_length(3) != 8 || c.hb.count_of_length(4) != 18 ||
      c.hb.count_of_length(5) != 48) {
    *w = "Witt counts are off";
    return false;
  }
  for (int n = 1; n <= 80; ++n) {
    const FreeElement& e = c.hb.expansion(n);
    if (!(theta(e) == -e)) {
      *w = "theta(H" + std::to_string(n) + ") != -H" + std::to_string(n);
      return false;
    }
  }
  for (long i = 0; i < count; ++i) {
    LieTreePtr t = sampling::random_tree(0x4A11 + static_cast<uint64_t>(i),
                                         static_cast<int>(maxdeg));
    LieSeries s = c.hb.rewrite(*t);
    FreeElement direct = expand(*t);
    if (!(c.hb.realize(s) == direct)) {
      *w = "rewrite does not invert expand on " + t->str();
      return false;
    }
    auto oracle = c.hb.coords_by_solve(direct);
    if (!oracle || !(*oracle == s)) {
      *w = "rewrite and the solve oracle disagree on " + t->str();
      return false;
    }
  }
  return true;
}

bool chk_mutation(Ctx&, const Params&, std::string* w) {
  const ReductionRules std_rules = ReductionRules::standard();
  Uaw reference(std_rules);
  const UawElement nf_ba = reference.reduce_word("BA");
  const UawElement nf_ca = reference.reduce_word("CA");
  const UawElement nf_cb = reference.reduce_word("CB");
  int detected = 0;
  for (int pair = 0; pair < 3; ++pair) {
    for (int which = 0; which < 3; ++which) {
      Uaw mutant(std_rules.perturbed(pair, which));
      bool caught = !(mutant.reduce_word("BA") == nf_ba) ||
                    !(mutant.reduce_word("CA") == nf_ca) ||
                    !(mutant.reduce_word("CB") == nf_cb);
      if (!caught) {
        // fall back to the Casimir check
        const UawElement om = mutant.omega_form(0);
        for (int n = 1; n < 6 && !caught; ++n) caught = !(mutant.omega_form(n) == om);
      }
      if (caught) {
        ++detected;
      } else {
        *w = "mutation (pair " + std::to_string(pair) + ", coeff " + std::to_string(which) +
             ") was not detected";
        return false;
      }
    }
  }
  return detected == 9;
}

std::string classify_pivots(Ctx& c, bool force, bool* ok,
                            std::vector<std::pair<std::string, int>>* counts = nullptr) {
  const std::vector<int> allowed = {1, 2, 3, 4, 6, 8, 12};
  std::map<std::string, int> seen;
  bool all_ok = true;
  auto run = [&](const Elimination& e) {
    for (const auto& piv : e.pivots) {
      FactorReport rep = factor_report(RatFunc(piv));
      if (!rep.only_cyclotomic(allowed)) all_ok = false;
      for (const auto& f : rep.num_factors) {
        if (f.is_q)
          seen["q"]++;
        else if (f.cyclotomic_order)
          seen["Phi" + std::to_string(f.cyclotomic_order)]++;
        else
          seen["non-cyclotomic:" + f.poly.str()]++;
      }
    }
  };
  if (force) {
    run(c.l4());
    run(c.l5());
    run(c.l5_retained());
  } else {
    if (c.l4_elim) run(*c.l4_elim);
    if (c.l5_elim) run(*c.l5_elim);
    if (c.l5_retained_elim) run(*c.l5_retained_elim);
  }
  std::string s = "pivot factors:";
  for (const auto& [k, v] : seen) {
    s += " " + k + "(x" + std::to_string(v) + ")";
    if (counts) counts->emplace_back(k, v);
  }
  *ok = all_ok;
  return s;
}

bool chk_pivot_factors(Ctx& c, const Params&, std::string* w) {
  bool ok = false;
  std::string summary = classify_pivots(c, true, &ok);
  if (!ok) *w = summary;
  return ok;
}

struct CheckDef {
  std::string name;
  std::vector<std::string> param_names;
  bool (*fn)(Ctx&, const Params&, std::string*);
  // which parameter tuples the suite instantiates, given the range
  std::vector<Params> (*suite_params)(long range);
};

std::vector<Params> once(long) { return {Params{}}; }

std::vector<Params> range_i(long r) {
  std::vector<Params> out;
  for (long i = 1; i <= r; ++i) out.push_back({{"i", i}});
  return out;
}

std::vector<Params> range_ijk(long r) {
  std::vector<Params> out;
  for (long i = 1; i <= r; ++i)
    for (long j = 1; j <= r; ++j)
      for (long k = 1; k <= r; ++k) out.push_back({{"i", i}, {"j", j}, {"k", k}});
  return out;
}

std::vector<Params> range_jk(long r) {
  std::vector<Params> out;
  for (long j = 1; j <= r; ++j)
    for (long k = 1; k <= r; ++k) out.push_back({{"j", j}, {"k", k}});
  return out;
}

std::vector<Params> range_nm(long r) {
  std::vector<Params> out;
  for (long n = 1; n <= std::min(r, 4L); ++n)
    for (long m = 0; m <= 1; ++m) out.push_back({{"n", n}, {"m", m}});
  return out;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"theta_r_nonzero", {}, chk_theta_r_nonzero, once},
      {"free_BA", {}, chk_free_BA, once},
      {"free_CA", {}, chk_free_CA, once},
      {"free_BAA", {}, chk_free_BAA, once},
      {"free_BAC", {}, chk_free_BAC, once},
      {"free_H4alpha", {}, chk_free_H4alpha, once},
      {"free_I0_identity", {}, chk_free_I0, once},
      {"I0_in_ideal", {}, chk_I0_in_ideal, once},
      {"I0_nonzero_hall", {}, chk_I0_nonzero_hall, once},
      {"casimir_six_equal", {}, chk_casimir, once},
      {"confluence", {"count", "maxlen"}, chk_confluence, once},
      {"assoc_reduce", {"count"}, chk_assoc, once},
      {"hall_roundtrip", {"count", "maxdeg"}, chk_hall_roundtrip, once},
      {"filtration_two_gen", {"i"}, chk_filtration_two_gen, range_i},
      {"filtration_ad_abc", {"i", "j", "k"}, chk_filtration_ad_abc, range_ijk},
      {"filtration_mixed", {"i", "j", "k"}, chk_filtration_mixed, range_ijk},
      {"complement_H10_H12", {}, chk_complement, once},
      {"omega_leading_H18_H24_H32", {}, chk_omega_leading, once},
      {"delta_six_identities", {}, chk_delta_six, once},
      {"aux_independence", {"n", "m"}, chk_aux_independence, range_nm},
      {"seven_H5b_H6a", {}, chk_seven_H5b_H6a, once},
      {"rel5_four_relations", {}, chk_rel5, once},
      {"L4_rank", {}, chk_L4_rank, once},
      {"L5_rank", {}, chk_L5_rank, once},
      {"L5_basis", {}, chk_L5_basis, once},
      {"L5_families", {"j", "k"}, chk_L5_families, range_jk},
      {"span_replacements", {}, chk_span_replacements, once},
      {"psl2_action", {}, chk_psl2, once},
      {"psi_homomorphism", {}, chk_psi, once},
      {"mutation_sensitivity", {}, chk_mutation, once},
      {"pivot_factors", {}, chk_pivot_factors, once},
  };
  return defs;
}

}  // namespace

Verifier::Verifier() : ctx_(std::make_unique<Context>()) {}
Verifier::~Verifier() = default;

std::vector<std::pair<std::string, std::vector<std::string>>> Verifier::checks() const {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (const auto& d : registry()) out.emplace_back(d.name, d.param_names);
  return out;
}

bool Verifier::has_check(const std::string& name) const {
  for (const auto& d : registry())
    if (d.name == name) return true;
  return false;
}

CheckResult Verifier::run_check(const std::string& name, const Params& params) {
  const CheckDef* def = nullptr;
  for (const auto& d : registry())
    if (d.name == name) def = &d;
  if (!def) throw UnknownCheck(name);
  for (const auto& [k, v] : params)
    if (std::find(def->param_names.begin(), def->param_names.end(), k) == def->param_names.end())
      throw BadParams("check " + name + " does not take parameter " + k);
  CheckResult res;
  res.name = name;
  res.params = params;
  auto t0 = std::chrono::steady_clock::now();
  res.passed = def->fn(*ctx_, params, &res.witness);
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!res.passed && res.witness.empty()) res.witness = "(no witness recorded)";
  return res;
}

SuiteReport Verifier::run_suite(const std::string& pattern, long range) {
  if (range < 1 || range > 8) throw BadParams("range out of [1,8]");
  SuiteReport rep;
  for (const auto& d : registry()) {
    if (!glob_match(pattern, d.name)) continue;
    for (const auto& p : d.suite_params(range)) {
      CheckResult r = run_check(d.name, p);
      rep.all_passed = rep.all_passed && r.passed;
      rep.results.push_back(std::move(r));
    }
  }
  if (ctx_->l4_elim || ctx_->l5_elim || ctx_->l5_retained_elim) {
    // summarize whatever eliminations ran (forces none itself)
    bool ok = true;
    rep.pivot_factor_summary = classify_pivots(*ctx_, false, &ok, &rep.pivot_factor_counts);
    rep.pivot_factors_ok = ok;
  }
  return rep;
}

}  // namespace qaw
