#include "qaw/hall.hpp"

#include <algorithm>
#include <cassert>

namespace qaw {

LieTreePtr LieTree::leaf(char letter) {
  if (letter != 'A' && letter != 'B' && letter != 'C')
    throw std::invalid_argument("leaf letter must be A, B or C");
  return LieTreePtr(new LieTree(letter));
}

LieTreePtr LieTree::node(LieTreePtr left, LieTreePtr right) {
  assert(left && right);
  return LieTreePtr(new LieTree(std::move(left), std::move(right)));
}

LieTreePtr LieTree::left_normed(const Word& w) {
  if (w.empty()) throw EmptyWord();
  LieTreePtr t = leaf(w[0]);
  for (size_t i = 1; i < w.length(); ++i) t = node(t, leaf(w[i]));
  return t;
}

std::string LieTree::str() const {
  if (is_leaf()) return std::string(1, letter_);
  return "[" + left_->str() + "," + right_->str() + "]";
}

int lie_compare(const LieTree& a, const LieTree& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  if (a.is_leaf()) {
    if (a.letter() != b.letter()) return a.letter() < b.letter() ? -1 : 1;
    return 0;
  }
  if (int c = lie_compare(*a.right(), *b.right()); c != 0) return c;
  return lie_compare(*a.left(), *b.left());
}

bool is_hall(const LieTree& t) {
  if (t.is_leaf()) return true;
  const LieTree& u = *t.left();
  const LieTree& v = *t.right();
  if (!is_hall(u) || !is_hall(v)) return false;
  if (lie_compare(u, v) <= 0) return false;
  if (!u.is_leaf() && lie_compare(*u.right(), v) > 0) return false;
  return true;
}

FreeElement expand(const LieTree& t) {
  if (t.is_leaf()) return FreeElement::letter(t.letter());
  return lie_bracket(expand(*t.left()), expand(*t.right()));
}

RatFunc LieSeries::coeff(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? RatFunc() : it->second;
}

void LieSeries::add_term(int index, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieSeries LieSeries::operator+(const LieSeries& o) const {
  LieSeries r = *this;
  for (const auto& [i, c] : o.terms_) r.add_term(i, c);
  return r;
}

LieSeries LieSeries::operator-(const LieSeries& o) const {
  LieSeries r = *this;
  for (const auto& [i, c] : o.terms_) r.add_term(i, -c);
  return r;
}

LieSeries LieSeries::operator*(const RatFunc& c) const {
  LieSeries r;
  if (c.is_zero()) return r;
  for (const auto& [i, c0] : terms_) r.terms_.emplace(i, c0 * c);
  return r;
}

std::string LieSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    std::string cs = c.str();
    bool multi = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool neg = !multi && cs.size() > 1 && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (cs == "1") {
      s += "H" + std::to_string(i);
    } else {
      s += (multi ? "(" + cs + ")" : cs) + "*H" + std::to_string(i);
    }
  }
  return s;
}

HallBasis::HallBasis(int max_len) {
  nodes_.resize(1);
  first_of_length_ = {0, 1};  // length 1 starts at index 1
  for (char x : {'A', 'B', 'C'}) {
    Node n;
    n.tree = LieTree::leaf(x);
    n.length = 1;
    nodes_.push_back(std::move(n));
  }
  max_len_ = 1;
  ensure(std::max(max_len, 1));
}

void HallBasis::ensure(int max_len) {
  std::lock_guard lk(mu_);
  ensure_nolock(max_len);
}

void HallBasis::ensure_nolock(int max_len) {
  for (int n = max_len_ + 1; n <= max_len; ++n) {
    // candidates [U,V] with |U|+|V| = n, U > V, and (U leaf or U.right <= V)
    std::vector<std::pair<int, int>> cands;  // (left, right) indices
    for (int lu = (n + 1) / 2; lu <= n - 1; ++lu) {
      int lv = n - lu;
      for (int u = first_of_length_nolock(lu); u < first_of_length_nolock(lu + 1); ++u) {
        for (int v = first_of_length_nolock(lv); v < first_of_length_nolock(lv + 1); ++v) {
          if (lu == lv && u <= v) continue;  // indices encode the total order
          if (nodes_[static_cast<size_t>(u)].right != 0 &&
              nodes_[static_cast<size_t>(u)].right > v)
            continue;
          cands.emplace_back(u, v);
        }
      }
    }
    // Definition order within a length: right child first, then left child;
    // child indices encode that order already.
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first < b.first;
    });
    first_of_length_.push_back(static_cast<int>(nodes_.size()));
    for (auto [u, v] : cands) {
      Node nn;
      nn.tree = LieTree::node(nodes_[static_cast<size_t>(u)].tree,
                              nodes_[static_cast<size_t>(v)].tree);
      nn.left = u;
      nn.right = v;
      nn.length = n;
      by_children_[{u, v}] = static_cast<int>(nodes_.size());
      nodes_.push_back(std::move(nn));
    }
    max_len_ = n;
  }
}

int HallBasis::count_of_length(int n) const {
  std::lock_guard lk(mu_);
  return first_of_length_nolock(n + 1) - first_of_length_nolock(n);
}

int HallBasis::first_of_length(int n) const {
  std::lock_guard lk(mu_);
  return first_of_length_nolock(n);
}

int HallBasis::first_of_length_nolock(int n) const {
  if (n < 1) return 1;
  if (n > max_len_) return static_cast<int>(nodes_.size());
  return first_of_length_[static_cast<size_t>(n)];
}

LieTreePtr HallBasis::tree(int index) const {
  std::lock_guard lk(mu_);
  if (index < 1 || index > size_nolock()) throw std::out_of_range("hall index out of range");
  return nodes_[static_cast<size_t>(index)].tree;
}

int HallBasis::length_of(int index) const {
  std::lock_guard lk(mu_);
  if (index < 1 || index > size_nolock()) throw std::out_of_range("hall index out of range");
  return nodes_[static_cast<size_t>(index)].length;
}

std::optional<int> HallBasis::index_of(const LieTree& t) {
  std::lock_guard lk(mu_);
  return index_of_nolock(t);
}

std::optional<int> HallBasis::index_of_nolock(const LieTree& t) {
  ensure_nolock(t.length());
  if (t.is_leaf()) return t.letter() - 'A' + 1;
  auto li = index_of_nolock(*t.left());
  if (!li) return std::nullopt;
  auto ri = index_of_nolock(*t.right());
  if (!ri) return std::nullopt;
  auto it = by_children_.find({*li, *ri});
  if (it == by_children_.end()) return std::nullopt;
  return it->second;
}

const FreeElement& HallBasis::expansion(int index) {
  std::lock_guard lk(mu_);
  return expansion_nolock(index);
}

const FreeElement& HallBasis::expansion_nolock(int index) {
  auto it = expansions_.find(index);
  if (it != expansions_.end()) return it->second;
  const Node& n = nodes_[static_cast<size_t>(index)];
  FreeElement e;
  if (n.left == 0) {
    e = FreeElement::letter(n.tree->letter());
  } else {
    e = lie_bracket(expansion_nolock(n.left), expansion_nolock(n.right));
  }
  return expansions_.emplace(index, std::move(e)).first->second;
}

LieSeries HallBasis::bracket_of_series(const LieSeries& a, int j) {
  LieSeries out;
  for (const auto& [i, c] : a.terms()) {
    LieSeries b = bracket_nolock(i, j);
    for (const auto& [k, d] : b.terms()) out.add_term(k, c * d);
  }
  return out;
}

LieSeries HallBasis::bracket(int i, int j) {
  std::lock_guard lk(mu_);
  return bracket_nolock(i, j);
}

LieSeries HallBasis::bracket_nolock(int i, int j) {
  if (++steps_ > kStepBudget) throw RewriteBudgetExceeded();
  if (i == j) return {};
  auto key = std::make_pair(i, j);
  if (auto it = bracket_memo_.find(key); it != bracket_memo_.end()) return it->second;
  LieSeries out;
  if (i < j) {  // index order is the monomial order
    out = bracket_nolock(j, i) * RatFunc(-1);
  } else {
    ensure_nolock(nodes_[static_cast<size_t>(i)].length + nodes_[static_cast<size_t>(j)].length);
    const Node& u = nodes_[static_cast<size_t>(i)];
    if (u.left == 0 || u.right <= j) {
      // Hall pair: [H_i, H_j] is itself a Hall element
      auto it = by_children_.find({i, j});
      assert(it != by_children_.end());
      out.add_term(it->second, RatFunc(1));
    } else {
      // Jacobi step: [[X,Y],V] = [[X,V],Y] + [X,[Y,V]] with X = left, Y = right
      LieSeries xv = bracket_nolock(u.left, j);
      out = bracket_of_series(xv, u.right);
      LieSeries yv = bracket_nolock(u.right, j);
      for (const auto& [m, c] : yv.terms()) {
        LieSeries xm = bracket_nolock(u.left, m);
        for (const auto& [k, d] : xm.terms()) out.add_term(k, c * d);
      }
    }
  }
  return bracket_memo_.emplace(key, std::move(out)).first->second;
}

LieSeries HallBasis::rewrite(const LieTree& t) {
  std::lock_guard lk(mu_);
  return rewrite_nolock(t);
}

LieSeries HallBasis::rewrite_nolock(const LieTree& t) {
  steps_ = 0;
  ensure_nolock(t.length());
  // bottom-up: rewrite children, then combine bilinearly
  struct Rec {
    HallBasis& h;
    LieSeries run(const LieTree& n) {
      if (n.is_leaf()) {
        LieSeries s;
        s.add_term(n.letter() - 'A' + 1, RatFunc(1));
        return s;
      }
      LieSeries l = run(*n.left());
      LieSeries r = run(*n.right());
      LieSeries out;
      for (const auto& [i, c] : l.terms())
        for (const auto& [j, d] : r.terms()) {
          LieSeries b = h.bracket_nolock(i, j);
          for (const auto& [k, e] : b.terms()) out.add_term(k, c * d * e);
        }
      return out;
    }
  };
  return Rec{*this}.run(t);
}

LieSeries HallBasis::rewrite(const std::vector<std::pair<RatFunc, LieTreePtr>>& expr) {
  std::lock_guard lk(mu_);
  LieSeries out;
  for (const auto& [c, t] : expr) {
    LieSeries s = rewrite_nolock(*t);
    for (const auto& [i, d] : s.terms()) out.add_term(i, c * d);
  }
  return out;
}

FreeElement HallBasis::realize(const LieSeries& s) {
  std::lock_guard lk(mu_);
  FreeElement out;
  for (const auto& [i, c] : s.terms()) out += expansion_nolock(i) * c;
  return out;
}

std::optional<LieSeries> HallBasis::coords_by_solve(const FreeElement& f) {
  std::lock_guard lk(mu_);
  LieSeries out;
  if (f.is_zero()) return out;
  if (!f.coeff(Word()).is_zero()) return std::nullopt;  // constants are not in L
  size_t maxdeg = f.degree();
  ensure_nolock(static_cast<int>(maxdeg));
  for (size_t n = 1; n <= maxdeg; ++n) {
    FreeElement part = f.homogeneous_part(n);
    if (part.is_zero()) continue;
    int b = first_of_length_nolock(static_cast<int>(n));
    int e = first_of_length_nolock(static_cast<int>(n) + 1);
    std::vector<FreeElement> fam;
    fam.reserve(static_cast<size_t>(e - b));
    for (int i = b; i < e; ++i) fam.push_back(expansion_nolock(i));
    std::vector<FreeElement> all = fam;
    all.push_back(part);
    auto basis = basis_from_support(all, std::less<Word>{}, Word{});
    ExactMatrix m = expansion_matrix(fam, basis);
    std::vector<RatFunc> target(static_cast<size_t>(basis.size()));
    for (const auto& [w, c] : part.terms()) target[static_cast<size_t>(*basis.find(w))] = c;
    auto sol = solve_coords(m, target);
    if (!sol) return std::nullopt;
    for (size_t i = 0; i < sol->size(); ++i)
      out.add_term(b + static_cast<int>(i), (*sol)[i]);
  }
  return out;
}

}  // namespace qaw
