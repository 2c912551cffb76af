#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaw {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero in Q(q)") {}
};
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroArgument : std::runtime_error {
  explicit ZeroArgument(const std::string& what) : std::runtime_error(what) {}
};

/// Laurent polynomial in q with integer coefficients: q^shift * sum coeffs[i] q^i.
/// Zero is the empty coefficient vector; otherwise the first and last entries are
/// nonzero, so the representation is canonical.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT: implicit by design
  explicit LaurentPoly(BigInt value);
  LaurentPoly(long shift, std::vector<BigInt> coeffs);

  static LaurentPoly q_pow(long e);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return shift_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

  /// Lowest power of q with nonzero coefficient. Zero polynomial reports 0.
  long low_degree() const { return shift_; }
  long high_degree() const { return shift_ + static_cast<long>(coeffs_.size()) - 1; }
  /// Degree of the shift-cleared polynomial part (width of the support).
  long poly_degree() const { return is_zero() ? 0 : static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coeff_at(long power) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly shifted(long e) const;  // multiply by q^e

  bool operator==(const LaurentPoly& o) const = default;

  /// Exact division in Z[q,q^-1]; nullopt when o does not divide exactly.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& o) const;

  BigRat eval(const BigRat& p) const;  // PoleError at p = 0 when shift < 0

  std::string str() const;

 private:
  void normalize();

  long shift_ = 0;
  std::vector<BigInt> coeffs_;
};

/// An element of Q(q) as a canonical fraction of Laurent polynomials.
///
/// Convention (equivalent to the usual one, documented here once): the
/// denominator is an ordinary polynomial with nonzero constant term and
/// positive leading coefficient; the numerator carries the whole net power of
/// q in its shift; gcd of the polynomial parts over Q[q] is 1 and the integer
/// contents are coprime. Equality of canonical forms is structural.
class RatFunc {
 public:
  RatFunc() = default;  // zero
  RatFunc(long value);  // NOLINT: implicit by design
  explicit RatFunc(BigInt value);
  explicit RatFunc(const BigRat& value);
  explicit RatFunc(LaurentPoly num);
  RatFunc(LaurentPoly num, LaurentPoly den);  // normalizes; DivisionByZero

  static RatFunc q_pow(long e) { return RatFunc(LaurentPoly::q_pow(e)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // DivisionByZero
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;
  RatFunc pow(long e) const;

  bool operator==(const RatFunc& o) const = default;

  BigRat eval(const BigRat& p) const;  // PoleError

  std::string str() const;

 private:
  LaurentPoly num_;          // carries the net q-shift
  LaurentPoly den_ = 1;      // shift 0, positive leading coefficient
};

inline RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a) * b; }

// Common scalars of the algebra.
RatFunc rf_q();        // q
RatFunc rf_qinv();     // q^-1
RatFunc rf_qplus();    // q + q^-1
RatFunc rf_qminus();   // q - q^-1

/// One irreducible (or conservatively unsplit) factor of a polynomial over Q.
struct Factor {
  LaurentPoly poly;        // primitive, positive leading coefficient; may be q itself
  int multiplicity = 0;
  int cyclotomic_order = 0;  // n when poly == Phi_n (n <= 12), else 0
  bool is_q = false;         // the factor q (reported with order "none")
  bool certified_irreducible = true;
};

struct FactorReport {
  BigInt num_content = 1;  // integer contents (den_content > 0)
  BigInt den_content = 1;
  std::vector<Factor> num_factors;
  std::vector<Factor> den_factors;

  /// True when every factor is q, or a cyclotomic polynomial whose order lies
  /// in `orders`. Integer contents always pass.
  bool only_cyclotomic(const std::vector<int>& orders) const;
  std::string str() const;
};

/// Squarefree-then-irreducible factorization of numerator and denominator over
/// Q[q], with cyclotomic recognition up to order 12. ZeroArgument on zero input.
FactorReport factor_report(const RatFunc& f);

/// The n-th cyclotomic polynomial, 1 <= n <= 12.
LaurentPoly cyclotomic(int n);

/// gcd of the polynomial parts over Q[q] (primitive, positive leading
/// coefficient, shift 0). Shifts are units in Z[q,q^-1] and are ignored.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_lcm(const LaurentPoly& a, const LaurentPoly& b);

/// Integer content (gcd of coefficients, non-negative; 0 for zero).
BigInt laurent_content(const LaurentPoly& a);

}  // namespace qaw
