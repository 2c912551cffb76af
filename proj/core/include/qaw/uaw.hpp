#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>

#include "qaw/freealg.hpp"

namespace qaw {

/// Normal word A^i B^j C^k al^r be^s ga^t of the irreducible basis.
struct NormalWord {
  uint32_t i = 0, j = 0, k = 0, r = 0, s = 0, t = 0;

  uint32_t degree() const { return i + j + k + r + s + t; }

  auto key() const { return std::tuple(degree(), i, j, k, r, s, t); }
  bool operator<(const NormalWord& o) const { return key() < o.key(); }
  bool operator==(const NormalWord& o) const = default;

  std::string str() const;
};

/// Omega-basis word A^i B^j C^k Om^l al^r be^s ga^t with ijk = 0.
struct OmegaWord {
  uint32_t i = 0, j = 0, k = 0, l = 0, r = 0, s = 0, t = 0;

  uint32_t weight() const { return i + j + k + 3 * l + r + s + t; }

  auto key() const { return std::tuple(weight(), i, j, k, l, r, s, t); }
  bool operator<(const OmegaWord& o) const { return key() < o.key(); }
  bool operator==(const OmegaWord& o) const = default;

  std::string str() const;
};

/// Element of the universal Askey-Wilson algebra in the irreducible basis.
class UawElement {
 public:
  UawElement() = default;
  static UawElement one() { return term(NormalWord{}); }
  static UawElement term(const NormalWord& w, RatFunc coeff = RatFunc(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<NormalWord, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const NormalWord& w) const;

  void add_term(const NormalWord& w, const RatFunc& c);

  UawElement operator+(const UawElement& o) const;
  UawElement operator-(const UawElement& o) const;
  UawElement operator-() const;
  UawElement operator*(const RatFunc& c) const;
  UawElement& operator+=(const UawElement& o);
  UawElement& operator-=(const UawElement& o) { return *this += -o; }

  bool operator==(const UawElement& o) const = default;

  std::string str() const;

 private:
  std::map<NormalWord, RatFunc> terms_;
};

inline UawElement operator*(const RatFunc& c, const UawElement& x) { return x * c; }

/// Element in the Omega basis (finitely supported map OmegaWord -> coeff).
class OmegaElement {
 public:
  bool is_zero() const { return terms_.empty(); }
  const std::map<OmegaWord, RatFunc>& terms() const { return terms_; }
  void add_term(const OmegaWord& w, const RatFunc& c);
  bool operator==(const OmegaElement& o) const = default;
  std::string str() const;

 private:
  std::map<OmegaWord, RatFunc> terms_;
};

/// Commutative polynomial in the three images Abar, Bbar, Cbar (printed a, b, c).
class CommPoly {
 public:
  using Mono = std::array<uint32_t, 3>;

  CommPoly() = default;
  static CommPoly one() { return term({0, 0, 0}); }
  static CommPoly term(const Mono& m, RatFunc coeff = RatFunc(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, RatFunc>& terms() const { return terms_; }
  void add_term(const Mono& m, const RatFunc& c);

  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly operator*(const RatFunc& c) const;
  CommPoly pow(uint32_t e) const;

  bool operator==(const CommPoly& o) const = default;
  std::string str() const;

 private:
  std::map<Mono, RatFunc> terms_;
};

/// The three reduction rules, one per inverted pair BA, CA, CB:
///   pair -> swap_c * (sorted pair) + letter_c * (third letter) + central_c * (central).
/// Kept as data so the mutation-sensitivity harness can perturb single
/// coefficients.
struct ReductionRules {
  enum Pair { BA = 0, CA = 1, CB = 2 };
  std::array<RatFunc, 3> swap_c;
  std::array<RatFunc, 3> letter_c;
  std::array<RatFunc, 3> central_c;

  static ReductionRules standard();
  /// Returns a copy with rules[pair].{swap,letter,central}[which] += 1.
  ReductionRules perturbed(int pair, int which) const;
};

/// Reduction engine and algebra operations for Delta.
///
/// Values are immutable and operations are pure; the engine memoizes word
/// reductions and a few derived normal forms behind a mutex, so concurrent
/// use is safe (callers serialize on the memo). Two engines with different
/// strategies implement the confluence check.
class Uaw {
 public:
  enum class Strategy { LeftmostInversion, RightmostInversion };

  explicit Uaw(ReductionRules rules = ReductionRules::standard(),
               Strategy strategy = Strategy::LeftmostInversion);

  const ReductionRules& rules() const { return rules_; }

  /// Normal form of a word (memoized).
  const UawElement& reduce_word(const std::string& letters);
  /// Normal form of a word with central exponents and a scalar multiplier.
  UawElement reduce(const Word& w, uint32_t r = 0, uint32_t s = 0, uint32_t t = 0,
                    const RatFunc& c = RatFunc(1));
  /// Image of a free-algebra element under the canonical map.
  UawElement reduce(const FreeElement& f);

  UawElement mul(const UawElement& x, const UawElement& y);
  UawElement bracket(const UawElement& x, const UawElement& y);
  UawElement pow(const UawElement& x, uint32_t e);

  // generators and the distinguished central elements
  UawElement A() const { return UawElement::term({1, 0, 0, 0, 0, 0}); }
  UawElement B() const { return UawElement::term({0, 1, 0, 0, 0, 0}); }
  UawElement C() const { return UawElement::term({0, 0, 1, 0, 0, 0}); }
  UawElement alpha() const { return UawElement::term({0, 0, 0, 1, 0, 0}); }
  UawElement beta() const { return UawElement::term({0, 0, 0, 0, 1, 0}); }
  UawElement gamma() const { return UawElement::term({0, 0, 0, 0, 0, 1}); }
  const UawElement& omega();  // normal form of the Casimir element

  /// The six equivalent expressions for the Casimir element, reduced; n in [0,6).
  UawElement omega_form(int n);

  /// The defining combinations as elements of the free algebra.
  static FreeElement alpha_free();
  static FreeElement beta_free();
  static FreeElement gamma_free();
  /// r_0..r_8, the nine defining relators, as free-algebra elements.
  static FreeElement r_free(int idx);
  /// The Casimir expression n (0..5) as a pure word element of the free algebra.
  static FreeElement omega_free(int n = 0);

  /// Max total degree over the support; ZeroArgument on the zero element.
  static uint32_t filtration_degree(const UawElement& x);

  // PSL2(Z) action and the commutative quotient
  UawElement rho(const UawElement& x);
  UawElement sigma(const UawElement& x);
  /// Substitute images for the letters of every word (algebra homomorphism).
  UawElement substitute(const FreeElement& f, const UawElement& im_a, const UawElement& im_b,
                        const UawElement& im_c);
  CommPoly psi(const UawElement& x);

  // Omega basis
  const UawElement& omega_word_nf(const OmegaWord& w);  // memoized
  OmegaElement to_omega_basis(const UawElement& x);
  UawElement from_omega_basis(const OmegaElement& x);

 private:
  UawElement reduce_word_uncached(const std::string& letters);

  ReductionRules rules_;
  Strategy strategy_;
  mutable std::recursive_mutex mu_;
  std::unordered_map<std::string, UawElement> reduce_memo_;
  std::map<OmegaWord, UawElement> omega_word_memo_;
  std::map<uint32_t, UawElement> omega_pow_memo_;
  std::map<uint32_t, UawElement> sigma_c_pow_memo_;
  bool have_omega_ = false;
  UawElement omega_;
};

}  // namespace qaw
