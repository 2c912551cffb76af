#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qaw/freealg.hpp"
#include "qaw/linalg.hpp"

namespace qaw {

struct RewriteBudgetExceeded : std::runtime_error {
  RewriteBudgetExceeded() : std::runtime_error("hall rewrite exceeded its step budget") {}
};

class LieTree;
using LieTreePtr = std::shared_ptr<const LieTree>;

/// Binary bracket tree over {A,B,C}; leaves are letters.
class LieTree {
 public:
  static LieTreePtr leaf(char letter);
  static LieTreePtr node(LieTreePtr left, LieTreePtr right);
  /// [[[X1,X2],...],Xt] for a word X1...Xt; EmptyWord on the empty word.
  static LieTreePtr left_normed(const Word& w);

  bool is_leaf() const { return !left_; }
  char letter() const { return letter_; }
  const LieTreePtr& left() const { return left_; }
  const LieTreePtr& right() const { return right_; }
  int length() const { return length_; }

  std::string str() const;

 private:
  LieTree(char letter) : letter_(letter), length_(1) {}
  LieTree(LieTreePtr l, LieTreePtr r)
      : left_(std::move(l)), right_(std::move(r)), length_(left_->length() + right_->length()) {}

  LieTreePtr left_, right_;
  char letter_ = 0;
  int length_ = 0;
};

/// Total order on Lie monomials: shorter first; letters A < B < C; equal-length
/// composites [X1,Y1], [X2,Y2] by right child, then left child, recursively.
int lie_compare(const LieTree& a, const LieTree& b);

/// Both Hall conditions at every internal node: for [U,V], U > V, and when
/// U = [X,Y] also Y <= V.
bool is_hall(const LieTree& t);

/// Recursive expansion into the free algebra.
FreeElement expand(const LieTree& t);

/// Finitely supported map from Hall index to coefficient.
class LieSeries {
 public:
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(int index) const;
  void add_term(int index, const RatFunc& c);
  LieSeries operator+(const LieSeries& o) const;
  LieSeries operator-(const LieSeries& o) const;
  LieSeries operator*(const RatFunc& c) const;
  bool operator==(const LieSeries& o) const = default;
  std::string str() const;  // in terms of H<n>

 private:
  std::map<int, RatFunc> terms_;
};

/// The canonical Hall basis enumeration, with rewriting into Hall coordinates.
///
/// Indices are 1-based; 1,2,3 are A,B,C, then all elements of each length in
/// the order of lie_compare. The table grows on demand (ensure). A mutex
/// guards the table and the memo tables, so concurrent queries are safe
/// (they serialize on the memo).
class HallBasis {
 public:
  explicit HallBasis(int max_len = 2);

  void ensure(int max_len);
  int max_len() const { std::lock_guard lk(mu_); return max_len_; }
  int size() const { std::lock_guard lk(mu_); return size_nolock(); }
  int count_of_length(int n) const;

  LieTreePtr tree(int index) const;
  int length_of(int index) const;
  /// First index of length n (indices of length n are contiguous).
  int first_of_length(int n) const;

  /// Canonical index of a Hall tree, nullopt when the tree is not Hall
  /// (or exceeds the generated range, which ensure() prevents).
  std::optional<int> index_of(const LieTree& t);

  /// Memoized expansion into the free algebra.
  const FreeElement& expansion(int index);

  /// [H_i, H_j] in Hall coordinates (memoized).
  LieSeries bracket(int i, int j);

  /// Rewrite an arbitrary bracket tree / linear combination into Hall
  /// coordinates via antisymmetry and the Jacobi rewriting step.
  LieSeries rewrite(const LieTree& t);
  LieSeries rewrite(const std::vector<std::pair<RatFunc, LieTreePtr>>& expr);

  /// Sum of coeff * expansion(index): the free-algebra element of a series.
  FreeElement realize(const LieSeries& s);

  /// Independent oracle: solve for Hall coordinates degree by degree via exact
  /// linear algebra over the word basis. nullopt when f is not in the free
  /// Lie algebra.
  std::optional<LieSeries> coords_by_solve(const FreeElement& f);

 private:
  struct Node {
    LieTreePtr tree;
    int left = 0, right = 0;  // child indices; 0 for leaves
    int length = 0;
  };

  LieSeries bracket_of_series(const LieSeries& a, int j);
  void ensure_nolock(int max_len);
  int size_nolock() const { return static_cast<int>(nodes_.size()) - 1; }
  int first_of_length_nolock(int n) const;
  std::optional<int> index_of_nolock(const LieTree& t);
  const FreeElement& expansion_nolock(int index);
  LieSeries bracket_nolock(int i, int j);
  LieSeries rewrite_nolock(const LieTree& t);

  std::vector<Node> nodes_;              // nodes_[0] unused
  std::vector<int> first_of_length_;     // first_of_length_[n], 1-based lengths
  std::map<std::pair<int, int>, int> by_children_;
  std::map<int, FreeElement> expansions_;
  std::map<std::pair<int, int>, LieSeries> bracket_memo_;
  mutable std::recursive_mutex mu_;
  int max_len_ = 0;
  long steps_ = 0;
  static constexpr long kStepBudget = 2'000'000;
};

}  // namespace qaw
