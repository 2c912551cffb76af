#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qaw/scalar.hpp"

namespace qaw {

struct EmptyWord : std::runtime_error {
  EmptyWord() : std::runtime_error("empty word where a letter is required") {}
};

/// A word on the ordered alphabet A < B < C. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view letters);

  static Word concat(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_, 0); }

  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](size_t i) const { return letters_[i]; }
  const std::string& letters() const { return letters_; }

  size_t count(char letter) const;
  /// Number of pairs (j,k), j<k, whose letters are out of order.
  size_t inversions() const;

  std::string str() const { return letters_.empty() ? "1" : letters_; }

  /// Ordered by length, then lexicographically.
  auto operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_.compare(o.letters_) <=> 0;
  }
  bool operator==(const Word& o) const = default;

 private:
  Word(std::string letters, int) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Element of the free unital associative algebra on {A,B,C} over Q(q):
/// a finitely supported map Word -> RatFunc, zero coefficients pruned.
class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement zero() { return {}; }
  static FreeElement one() { return word(Word()); }
  static FreeElement word(const Word& w, RatFunc coeff = RatFunc(1));
  static FreeElement letter(char x) { return word(Word(std::string(1, x))); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, RatFunc>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  /// The coefficient of W: the bilinear form (f, W).
  RatFunc coeff(const Word& w) const;

  /// Restriction to words of length exactly n.
  FreeElement homogeneous_part(size_t n) const;
  /// Max word length in the support (zero element reports 0).
  size_t degree() const;

  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement operator-() const;
  FreeElement operator*(const FreeElement& o) const;  // concatenation product
  FreeElement operator*(const RatFunc& c) const;
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o) { return *this += -o; }
  FreeElement& operator*=(const RatFunc& c) { return *this = *this * c; }

  bool operator==(const FreeElement& o) const = default;

  void add_term(const Word& w, const RatFunc& c);

  std::string str() const;

 private:
  std::map<Word, RatFunc> terms_;
};

inline FreeElement operator*(const RatFunc& c, const FreeElement& f) { return f * c; }

/// [f, g] = fg - gf.
FreeElement lie_bracket(const FreeElement& f, const FreeElement& g);

/// The unique anti-automorphism of the free algebra sending each letter X to
/// -X: a word of length n maps to (-1)^n times its reversal.
FreeElement theta(const FreeElement& f);

}  // namespace qaw
