#include "qaw/uaw.hpp"

#include <algorithm>
#include <cassert>

namespace qaw {
namespace {

std::string exp_str(const char* name, uint32_t e) {
  if (e == 0) return "";
  std::string s = " ";
  s += name;
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

std::string monomial_str(const std::string& body) {
  return body.empty() ? "1" : body.substr(1);  // strip leading space
}

std::string terms_str(const std::string& mono, const RatFunc& c, bool first) {
  std::string cs = c.str();
  bool multi = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
  bool neg = !multi && cs.size() > 1 && cs[0] == '-';
  if (neg) cs = cs.substr(1);
  std::string s = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (cs == "1" && mono != "1") return s + mono;
  std::string body = multi ? "(" + cs + ")" : cs;
  if (mono != "1") body += " " + mono;
  return s + body;
}

}  // namespace

std::string NormalWord::str() const {
  std::string b = exp_str("A", i) + exp_str("B", j) + exp_str("C", k) + exp_str("al", r) +
                  exp_str("be", s) + exp_str("ga", t);
  return monomial_str(b);
}

std::string OmegaWord::str() const {
  std::string b = exp_str("A", i) + exp_str("B", j) + exp_str("C", k) + exp_str("Om", l) +
                  exp_str("al", r) + exp_str("be", s) + exp_str("ga", t);
  return monomial_str(b);
}

UawElement UawElement::term(const NormalWord& w, RatFunc coeff) {
  UawElement x;
  if (!coeff.is_zero()) x.terms_.emplace(w, std::move(coeff));
  return x;
}

RatFunc UawElement::coeff(const NormalWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void UawElement::add_term(const NormalWord& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UawElement& UawElement::operator+=(const UawElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UawElement UawElement::operator+(const UawElement& o) const {
  UawElement r = *this;
  r += o;
  return r;
}

UawElement UawElement::operator-() const {
  UawElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

UawElement UawElement::operator-(const UawElement& o) const { return *this + (-o); }

UawElement UawElement::operator*(const RatFunc& c) const {
  UawElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, c0] : terms_) r.terms_.emplace(w, c0 * c);
  return r;
}

std::string UawElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    s += terms_str(w.str(), c, first);
    first = false;
  }
  return s;
}

void OmegaElement::add_term(const OmegaWord& w, const RatFunc& c) {
  if (c.is_zero()) return;
  assert(w.i == 0 || w.j == 0 || w.k == 0);
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string OmegaElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    s += terms_str(w.str(), c, first);
    first = false;
  }
  return s;
}

CommPoly CommPoly::term(const Mono& m, RatFunc coeff) {
  CommPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(m, std::move(coeff));
  return p;
}

void CommPoly::add_term(const Mono& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  CommPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
  CommPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
  CommPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return r;
}

CommPoly CommPoly::operator*(const RatFunc& c) const {
  CommPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, c0] : terms_) r.terms_.emplace(m, c0 * c);
  return r;
}

CommPoly CommPoly::pow(uint32_t e) const {
  CommPoly r = one();
  for (uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string CommPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"a", "b", "c"};
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string body;
    for (int v = 0; v < 3; ++v) body += exp_str(names[v], m[static_cast<size_t>(v)]);
    s += terms_str(monomial_str(body), c, first);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------

ReductionRules ReductionRules::standard() {
  ReductionRules r;
  const RatFunc q = rf_q(), qi = rf_qinv();
  // BA = q^2 AB + (q^3 - q^-1) C - (q^2 - 1) ga
  r.swap_c[BA] = q * q;
  r.letter_c[BA] = q.pow(3) - qi;
  r.central_c[BA] = -(q * q - RatFunc(1));
  // CA = q^-2 AC - (q - q^-3) B + (1 - q^-2) be
  r.swap_c[CA] = qi * qi;
  r.letter_c[CA] = -(q - qi.pow(3));
  r.central_c[CA] = RatFunc(1) - qi * qi;
  // CB = q^2 BC + (q^3 - q^-1) A - (q^2 - 1) al
  r.swap_c[CB] = q * q;
  r.letter_c[CB] = q.pow(3) - qi;
  r.central_c[CB] = -(q * q - RatFunc(1));
  return r;
}

ReductionRules ReductionRules::perturbed(int pair, int which) const {
  ReductionRules r = *this;
  auto& slot = which == 0 ? r.swap_c : which == 1 ? r.letter_c : r.central_c;
  slot[static_cast<size_t>(pair)] += RatFunc(1);
  return r;
}

Uaw::Uaw(ReductionRules rules, Strategy strategy)
    : rules_(std::move(rules)), strategy_(strategy) {}

namespace {

struct PairInfo {
  int rule;          // ReductionRules::Pair
  char swapped[3];   // sorted pair, null-terminated
  char letter;       // third letter
  int central_slot;  // 0 = al (r), 1 = be (s), 2 = ga (t)
};

const PairInfo* pair_info(char x, char y) {
  static const PairInfo kBA{ReductionRules::BA, "AB", 'C', 2};
  static const PairInfo kCA{ReductionRules::CA, "AC", 'B', 1};
  static const PairInfo kCB{ReductionRules::CB, "BC", 'A', 0};
  if (x == 'B' && y == 'A') return &kBA;
  if (x == 'C' && y == 'A') return &kCA;
  if (x == 'C' && y == 'B') return &kCB;
  return nullptr;
}

}  // namespace

UawElement Uaw::reduce_word_uncached(const std::string& w) {
  long pos = -1;
  if (strategy_ == Strategy::LeftmostInversion) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) {
        pos = static_cast<long>(p);
        break;
      }
  } else {
    for (long p = static_cast<long>(w.size()) - 2; p >= 0; --p)
      if (w[static_cast<size_t>(p)] > w[static_cast<size_t>(p) + 1]) {
        pos = p;
        break;
      }
  }
  if (pos < 0) {
    NormalWord nw;
    for (char c : w) (c == 'A' ? nw.i : c == 'B' ? nw.j : nw.k)++;
    return UawElement::term(nw);
  }
  const PairInfo* pi = pair_info(w[static_cast<size_t>(pos)], w[static_cast<size_t>(pos) + 1]);
  assert(pi);
  std::string head = w.substr(0, static_cast<size_t>(pos));
  std::string tail = w.substr(static_cast<size_t>(pos) + 2);
  UawElement out;
  const size_t rule = static_cast<size_t>(pi->rule);
  // swap term keeps the length and strictly lowers the inversion count;
  // the other two terms lower the length, so the recursion terminates
  out += reduce_word(head + pi->swapped + tail) * rules_.swap_c[rule];
  out += reduce_word(head + pi->letter + tail) * rules_.letter_c[rule];
  const UawElement& dropped = reduce_word(head + tail);
  UawElement shifted;
  for (const auto& [nw, c] : dropped.terms()) {
    NormalWord m = nw;
    (pi->central_slot == 0 ? m.r : pi->central_slot == 1 ? m.s : m.t)++;
    shifted.add_term(m, c * rules_.central_c[rule]);
  }
  out += shifted;
  return out;
}

const UawElement& Uaw::reduce_word(const std::string& letters) {
  std::lock_guard lk(mu_);
  auto it = reduce_memo_.find(letters);
  if (it != reduce_memo_.end()) return it->second;
  UawElement r = reduce_word_uncached(letters);
  return reduce_memo_.emplace(letters, std::move(r)).first->second;
}

UawElement Uaw::reduce(const Word& w, uint32_t r, uint32_t s, uint32_t t, const RatFunc& c) {
  const UawElement& base = reduce_word(w.letters());
  UawElement out;
  for (const auto& [nw, c0] : base.terms()) {
    NormalWord m = nw;
    m.r += r;
    m.s += s;
    m.t += t;
    out.add_term(m, c0 * c);
  }
  return out;
}

UawElement Uaw::reduce(const FreeElement& f) {
  UawElement out;
  for (const auto& [w, c] : f.terms()) out += reduce(w, 0, 0, 0, c);
  return out;
}

UawElement Uaw::mul(const UawElement& x, const UawElement& y) {
  std::lock_guard lk(mu_);
  UawElement out;
  for (const auto& [w1, c1] : x.terms()) {
    for (const auto& [w2, c2] : y.terms()) {
      std::string w;
      w.append(w1.i, 'A').append(w1.j, 'B').append(w1.k, 'C');
      w.append(w2.i, 'A').append(w2.j, 'B').append(w2.k, 'C');
      const UawElement& base = reduce_word(w);
      RatFunc c = c1 * c2;
      for (const auto& [nw, c0] : base.terms()) {
        NormalWord m = nw;
        m.r += w1.r + w2.r;
        m.s += w1.s + w2.s;
        m.t += w1.t + w2.t;
        out.add_term(m, c0 * c);
      }
    }
  }
  return out;
}

UawElement Uaw::bracket(const UawElement& x, const UawElement& y) {
  return mul(x, y) - mul(y, x);
}

UawElement Uaw::pow(const UawElement& x, uint32_t e) {
  UawElement r = UawElement::one();
  for (uint32_t i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

FreeElement Uaw::alpha_free() {
  const RatFunc q = rf_q(), qi = rf_qinv(), qm = rf_qminus();
  FreeElement B = FreeElement::letter('B'), C = FreeElement::letter('C');
  return FreeElement::letter('A') * rf_qplus() + (B * C) * (q / qm) - (C * B) * (qi / qm);
}

FreeElement Uaw::beta_free() {
  const RatFunc q = rf_q(), qi = rf_qinv(), qm = rf_qminus();
  FreeElement A = FreeElement::letter('A'), C = FreeElement::letter('C');
  return FreeElement::letter('B') * rf_qplus() + (C * A) * (q / qm) - (A * C) * (qi / qm);
}

FreeElement Uaw::gamma_free() {
  const RatFunc q = rf_q(), qi = rf_qinv(), qm = rf_qminus();
  FreeElement A = FreeElement::letter('A'), B = FreeElement::letter('B');
  return FreeElement::letter('C') * rf_qplus() + (A * B) * (q / qm) - (B * A) * (qi / qm);
}

FreeElement Uaw::r_free(int idx) {
  FreeElement A = FreeElement::letter('A'), B = FreeElement::letter('B'),
              C = FreeElement::letter('C');
  switch (idx) {
    case 0: return lie_bracket(A, alpha_free());
    case 1: return lie_bracket(B, beta_free());
    case 2: return lie_bracket(C, gamma_free());
    case 3: return lie_bracket(B, alpha_free());
    case 4: return lie_bracket(C, beta_free());
    case 5: return lie_bracket(A, gamma_free());
    case 6: return lie_bracket(C, alpha_free());
    case 7: return lie_bracket(A, beta_free());
    case 8: return lie_bracket(B, gamma_free());
    default: throw std::out_of_range("r index must be 0..8");
  }
}

namespace {

struct OmegaForm {
  const char* word;
  int ca, cb, cc;        // powers of q on A^2, B^2, C^2
  int cw;                // power of q on the cubic word
  int cal, cbe, cga;     // powers of q on A al, B be, C ga
};

// The six equivalent Casimir expressions.
constexpr OmegaForm kOmega[6] = {
    {"ABC", 2, -2, 2, 1, 1, -1, 1},
    {"BCA", 2, 2, -2, 1, 1, 1, -1},
    {"CAB", -2, 2, 2, 1, -1, 1, 1},
    {"CBA", -2, 2, -2, -1, -1, 1, -1},
    {"ACB", -2, -2, 2, -1, -1, -1, 1},
    {"BAC", 2, -2, -2, -1, 1, -1, -1},
};

}  // namespace

UawElement Uaw::omega_form(int n) {
  assert(n >= 0 && n < 6);
  const OmegaForm& sp = kOmega[n];
  auto qp = [](int e) { return RatFunc::q_pow(e); };
  UawElement out = reduce(Word(sp.word), 0, 0, 0, qp(sp.cw));
  out += reduce(Word("AA"), 0, 0, 0, qp(sp.ca));
  out += reduce(Word("BB"), 0, 0, 0, qp(sp.cb));
  out += reduce(Word("CC"), 0, 0, 0, qp(sp.cc));
  out += reduce(Word("A"), 1, 0, 0, -qp(sp.cal));
  out += reduce(Word("B"), 0, 1, 0, -qp(sp.cbe));
  out += reduce(Word("C"), 0, 0, 1, -qp(sp.cga));
  return out;
}

FreeElement Uaw::omega_free(int n) {
  assert(n >= 0 && n < 6);
  const OmegaForm& sp = kOmega[n];
  auto qp = [](int e) { return RatFunc::q_pow(e); };
  FreeElement A = FreeElement::letter('A'), B = FreeElement::letter('B'),
              C = FreeElement::letter('C');
  FreeElement out = FreeElement::word(Word(sp.word)) * qp(sp.cw);
  out += A * A * qp(sp.ca) + B * B * qp(sp.cb) + C * C * qp(sp.cc);
  out -= A * alpha_free() * qp(sp.cal);
  out -= B * beta_free() * qp(sp.cbe);
  out -= C * gamma_free() * qp(sp.cga);
  return out;
}

const UawElement& Uaw::omega() {
  std::lock_guard lk(mu_);
  if (!have_omega_) {
    omega_ = omega_form(0);
    have_omega_ = true;
  }
  return omega_;
}

uint32_t Uaw::filtration_degree(const UawElement& x) {
  if (x.is_zero()) throw ZeroArgument("filtration_degree of the zero element");
  uint32_t d = 0;
  for (const auto& [w, c] : x.terms()) d = std::max(d, w.degree());
  return d;
}

UawElement Uaw::rho(const UawElement& x) {
  // A->B->C->A, al->be->ga->al; images of letters are letters, so each normal
  // word maps to one word to re-reduce
  UawElement out;
  for (const auto& [w, c] : x.terms()) {
    std::string img;
    img.append(w.i, 'B').append(w.j, 'C').append(w.k, 'A');
    out += reduce(Word(img), w.t, w.r, w.s, c);
  }
  return out;
}

UawElement Uaw::sigma(const UawElement& x) {
  std::lock_guard lk(mu_);
  // A<->B, al<->be, ga fixed, C -> C + [A,B]/(q - q^-1)
  UawElement sc = C() + bracket(A(), B()) * rf_qminus().inverse();
  UawElement out;
  for (const auto& [w, c] : x.terms()) {
    std::string ba;
    ba.append(w.i, 'B').append(w.j, 'A');
    UawElement t = reduce(Word(ba), w.s, w.r, w.t, c);
    if (w.k > 0) {
      auto it = sigma_c_pow_memo_.find(w.k);
      if (it == sigma_c_pow_memo_.end())
        it = sigma_c_pow_memo_.emplace(w.k, pow(sc, w.k)).first;
      t = mul(t, it->second);
    }
    out += t;
  }
  return out;
}

UawElement Uaw::substitute(const FreeElement& f, const UawElement& im_a, const UawElement& im_b,
                           const UawElement& im_c) {
  UawElement out;
  for (const auto& [w, c] : f.terms()) {
    UawElement t = UawElement::one() * c;
    for (char x : w.letters()) t = mul(t, x == 'A' ? im_a : x == 'B' ? im_b : im_c);
    out += t;
  }
  return out;
}

CommPoly Uaw::psi(const UawElement& x) {
  const RatFunc qp = rf_qplus();
  CommPoly a = CommPoly::term({1, 0, 0}), b = CommPoly::term({0, 1, 0}),
           c = CommPoly::term({0, 0, 1});
  CommPoly al = a * qp + b * c, be = b * qp + a * c, ga = c * qp + a * b;
  CommPoly out;
  for (const auto& [w, coeff] : x.terms()) {
    CommPoly t = CommPoly::term({w.i, w.j, w.k}, coeff);
    if (w.r) t = t * al.pow(w.r);
    if (w.s) t = t * be.pow(w.s);
    if (w.t) t = t * ga.pow(w.t);
    out = out + t;
  }
  return out;
}

const UawElement& Uaw::omega_word_nf(const OmegaWord& w) {
  std::lock_guard lk(mu_);
  auto it = omega_word_memo_.find(w);
  if (it != omega_word_memo_.end()) return it->second;
  auto pit = omega_pow_memo_.find(w.l);
  if (pit == omega_pow_memo_.end())
    pit = omega_pow_memo_.emplace(w.l, pow(omega(), w.l)).first;
  UawElement base = UawElement::term({w.i, w.j, w.k, 0, 0, 0});
  UawElement nf = mul(base, pit->second);
  UawElement shifted;
  for (const auto& [nw, c] : nf.terms()) {
    NormalWord m = nw;
    m.r += w.r;
    m.s += w.s;
    m.t += w.t;
    shifted.add_term(m, c);
  }
  return omega_word_memo_.emplace(w, std::move(shifted)).first->second;
}

OmegaElement Uaw::to_omega_basis(const UawElement& x) {
  std::lock_guard lk(mu_);
  // The normal form of an Omega-basis word has a unique highest-degree term
  // A^(i+l) B^(j+l) C^(k+l) al^r be^s ga^t with a pure q-power coefficient, so
  // peeling leading terms from the top degree down is an exact triangular solve.
  OmegaElement out;
  UawElement rest = x;
  size_t guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 1'000'000) throw std::logic_error("omega basis conversion did not terminate");
    const auto& [w, c] = *rest.terms().rbegin();  // max in (degree, lex) order
    uint32_t l = std::min({w.i, w.j, w.k});
    OmegaWord ow{w.i - l, w.j - l, w.k - l, l, w.r, w.s, w.t};
    const UawElement& nf = omega_word_nf(ow);
    RatFunc lead = nf.coeff(w);
    if (lead.is_zero()) throw std::logic_error("omega basis leading term vanished");
    RatFunc ratio = c / lead;
    out.add_term(ow, ratio);
    rest -= nf * ratio;
  }
  return out;
}

UawElement Uaw::from_omega_basis(const OmegaElement& x) {
  UawElement out;
  for (const auto& [w, c] : x.terms()) out += omega_word_nf(w) * c;
  return out;
}

}  // namespace qaw
