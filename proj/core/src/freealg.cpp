#include "qaw/freealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaw {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char c : letters_)
    if (c != 'A' && c != 'B' && c != 'C')
      throw std::invalid_argument("word letters must be A, B or C");
}

size_t Word::count(char letter) const {
  return static_cast<size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

size_t Word::inversions() const {
  size_t n = 0;
  for (size_t j = 0; j + 1 < letters_.size(); ++j)
    for (size_t k = j + 1; k < letters_.size(); ++k)
      if (letters_[j] > letters_[k]) ++n;
  return n;
}

FreeElement FreeElement::word(const Word& w, RatFunc coeff) {
  FreeElement f;
  if (!coeff.is_zero()) f.terms_.emplace(w, std::move(coeff));
  return f;
}

RatFunc FreeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

FreeElement FreeElement::homogeneous_part(size_t n) const {
  FreeElement f;
  for (const auto& [w, c] : terms_)
    if (w.length() == n) f.terms_.emplace(w, c);
  return f;
}

size_t FreeElement::degree() const {
  size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.length());
  return d;
}

void FreeElement::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement r = *this;
  r += o;
  return r;
}

FreeElement FreeElement::operator-() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const { return *this + (-o); }

FreeElement FreeElement::operator*(const FreeElement& o) const {
  FreeElement r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(Word::concat(w1, w2), c1 * c2);
  return r;
}

FreeElement FreeElement::operator*(const RatFunc& c) const {
  FreeElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, c0] : terms_) r.terms_.emplace(w, c0 * c);
  return r;
}

std::string FreeElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool multi = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool neg = !multi && cs.size() > 1 && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (cs == "1") {
      s += w.str();
    } else {
      s += (multi ? "(" + cs + ")" : cs) + "*" + w.str();
    }
  }
  return s;
}

FreeElement lie_bracket(const FreeElement& f, const FreeElement& g) {
  return f * g - g * f;
}

FreeElement theta(const FreeElement& f) {
  FreeElement r;
  for (const auto& [w, c] : f.terms()) {
    std::string rev(w.letters().rbegin(), w.letters().rend());
    r.add_term(Word(rev), w.length() % 2 == 0 ? c : -c);
  }
  return r;
}

}  // namespace qaw
