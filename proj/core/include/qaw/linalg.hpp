#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qaw/scalar.hpp"

namespace qaw {

struct MissingBasisLabel : std::runtime_error {
  MissingBasisLabel() : std::runtime_error("vector support contains an unindexed basis label") {}
};

/// An ordered list of distinct basis labels with position lookup.
template <typename Label>
class BasisIndex {
 public:
  int add(const Label& label) {
    auto [it, inserted] = pos_.emplace(label, static_cast<int>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::optional<int> find(const Label& label) const {
    auto it = pos_.find(label);
    if (it == pos_.end()) return std::nullopt;
    return it->second;
  }
  int size() const { return static_cast<int>(labels_.size()); }
  const Label& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<Label>& labels() const { return labels_; }

 private:
  std::vector<Label> labels_;
  std::map<Label, int> pos_;
};

/// Dense matrix of exact rational functions.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatFunc& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const RatFunc& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  ExactMatrix transposed() const;

 private:
  int rows_, cols_;
  std::vector<RatFunc> a_;
};

/// Row v, column b holds the coefficient of basis label b in vector v.
/// Vectors are any map-like supports (Label -> RatFunc).
template <typename E, typename Label>
ExactMatrix expansion_matrix(const std::vector<E>& vectors, const BasisIndex<Label>& basis) {
  ExactMatrix m(static_cast<int>(vectors.size()), basis.size());
  for (size_t r = 0; r < vectors.size(); ++r) {
    for (const auto& [label, coeff] : vectors[r].terms()) {
      auto c = basis.find(label);
      if (!c) throw MissingBasisLabel();
      m.at(static_cast<int>(r), *c) = coeff;
    }
  }
  return m;
}

/// Collect every support label of `vectors`, ordered by `cmp`.
template <typename E, typename Label, typename Cmp>
BasisIndex<Label> basis_from_support(const std::vector<E>& vectors, Cmp cmp, Label /*tag*/) {
  std::vector<Label> all;
  for (const auto& v : vectors)
    for (const auto& [label, coeff] : v.terms()) all.push_back(label);
  std::sort(all.begin(), all.end(), cmp);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  BasisIndex<Label> b;
  for (const auto& l : all) b.add(l);
  return b;
}

/// Result of fraction-free Bareiss elimination. Pivots are the elimination
/// pivots after per-row clearing of denominators, q-shifts and integer
/// content; each one is a minor of the cleared integer matrix, and every
/// division along the way is asserted exact.
struct Elimination {
  int rank = 0;
  std::vector<LaurentPoly> pivots;
  RatFunc det;  // meaningful for square matrices (0 when singular)
};

Elimination bareiss(const ExactMatrix& m);

int rank_of(const ExactMatrix& m);
RatFunc det_of(const ExactMatrix& m);  // requires square

/// Exact coordinates x with sum_i x_i * family_row_i = target, or nullopt.
/// Plain Gaussian elimination over Q(q).
std::optional<std::vector<RatFunc>> solve_coords(const ExactMatrix& family_rows,
                                                 const std::vector<RatFunc>& target_row);

/// Many targets against one family, sharing a single elimination pass.
std::vector<std::optional<std::vector<RatFunc>>> solve_coords_many(
    const ExactMatrix& family_rows, const std::vector<std::vector<RatFunc>>& targets);

}  // namespace qaw
