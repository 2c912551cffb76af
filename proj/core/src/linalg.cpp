#include "qaw/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace qaw {

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

struct ClearedMatrix {
  std::vector<std::vector<LaurentPoly>> a;  // integral Laurent entries, shift >= 0
  std::vector<RatFunc> row_mult;            // cleared_row = original_row * row_mult
};

/// Multiply each row by the lcm of its denominators, then strip the common
/// q-shift and integer content. Row scaling does not change the rank, and the
/// multipliers are tracked for determinants.
ClearedMatrix clear_rows(const ExactMatrix& m) {
  ClearedMatrix out;
  out.a.resize(static_cast<size_t>(m.rows()));
  out.row_mult.resize(static_cast<size_t>(m.rows()), RatFunc(1));
  for (int r = 0; r < m.rows(); ++r) {
    LaurentPoly den_lcm = 1;
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) den_lcm = laurent_lcm(den_lcm, m.at(r, c).den());
    std::vector<LaurentPoly> row(static_cast<size_t>(m.cols()));
    bool any = false;
    long min_shift = 0;
    BigInt cont = 0;
    for (int c = 0; c < m.cols(); ++c) {
      const RatFunc& x = m.at(r, c);
      if (x.is_zero()) continue;
      auto cof = den_lcm.divide_exact(x.den());
      if (!cof) throw std::logic_error("row lcm is not divisible by an entry denominator");
      LaurentPoly e = x.num() * *cof;
      if (!any || e.low_degree() < min_shift) min_shift = e.low_degree();
      mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), laurent_content(e).get_mpz_t());
      row[static_cast<size_t>(c)] = std::move(e);
      any = true;
    }
    if (any) {
      for (auto& e : row) {
        if (e.is_zero()) continue;
        e = e.shifted(-min_shift);
        auto d = e.divide_exact(LaurentPoly(cont));
        if (!d) throw std::logic_error("row content does not divide an entry");
        e = *d;
      }
      // row_mult = den_lcm * q^-min_shift / cont
      out.row_mult[static_cast<size_t>(r)] =
          RatFunc(den_lcm.shifted(-min_shift), LaurentPoly(cont));
    }
    out.a[static_cast<size_t>(r)] = std::move(row);
  }
  return out;
}

}  // namespace

Elimination bareiss(const ExactMatrix& m) {
  Elimination out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.det = (m.rows() == m.cols()) ? RatFunc(1) : RatFunc(0);
    return out;
  }
  ClearedMatrix cm = clear_rows(m);
  auto& a = cm.a;
  const int rows = m.rows(), cols = m.cols();
  // Fraction-free elimination with lazy row generations: a row untouched by a
  // pivot step keeps its older minors, recorded in gen[i]; the one-step
  // Sylvester identity lets it be rescaled to the current generation exactly
  // when it next participates. Pivot values equal the eager algorithm's.
  std::vector<int> gen(static_cast<size_t>(rows), 0);
  std::vector<LaurentPoly> pivot_at{1};  // pivot_at[g] = pivot of step g (prefix "1")
  int sign = 1;
  int k = 0;  // current pivot row
  auto divide = [](const LaurentPoly& v, const LaurentPoly& d) {
    auto r = v.divide_exact(d);
    if (!r) throw std::logic_error("Bareiss pivot division not exact");
    return std::move(*r);
  };
  auto raise_row = [&](int i, int to_gen) {
    if (gen[static_cast<size_t>(i)] == to_gen) return;
    const LaurentPoly& num = pivot_at[static_cast<size_t>(to_gen)];
    const LaurentPoly& den = pivot_at[static_cast<size_t>(gen[static_cast<size_t>(i)])];
    for (auto& e : a[static_cast<size_t>(i)])
      if (!e.is_zero()) e = divide(e * num, den);
    gen[static_cast<size_t>(i)] = to_gen;
  };
  for (int col = 0; col < cols && k < rows; ++col) {
    // pivot selection: first column with a nonzero entry among the remaining
    // rows, smallest polynomial degree (at the current generation) as tiebreak
    int pivot = -1;
    long best_deg = 0;
    for (int i = k; i < rows; ++i) {
      const LaurentPoly& e = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (e.is_zero()) continue;
      long deg = e.poly_degree() + pivot_at[static_cast<size_t>(k)].poly_degree() -
                 pivot_at[static_cast<size_t>(gen[static_cast<size_t>(i)])].poly_degree();
      if (pivot < 0 || deg < best_deg) {
        pivot = i;
        best_deg = deg;
      }
    }
    if (pivot < 0) continue;
    if (pivot != k) {
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(k)]);
      std::swap(gen[static_cast<size_t>(pivot)], gen[static_cast<size_t>(k)]);
      std::swap(cm.row_mult[static_cast<size_t>(pivot)], cm.row_mult[static_cast<size_t>(k)]);
      sign = -sign;
    }
    raise_row(k, k);
    const LaurentPoly& prev = pivot_at[static_cast<size_t>(k)];
    const LaurentPoly p = a[static_cast<size_t>(k)][static_cast<size_t>(col)];
    for (int i = k + 1; i < rows; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) continue;  // stays lazy
      raise_row(i, k);
      const LaurentPoly aik = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
      for (int j = col; j < cols; ++j) {
        const LaurentPoly& akj = a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        LaurentPoly v = p * a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (!akj.is_zero()) v -= aik * akj;
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            v.is_zero() ? LaurentPoly() : divide(v, prev);
      }
      gen[static_cast<size_t>(i)] = k + 1;
    }
    pivot_at.push_back(p);
    out.pivots.push_back(p);
    ++k;
  }
  out.rank = k;
  if (m.rows() == m.cols()) {
    if (out.rank < m.rows()) {
      out.det = RatFunc(0);
    } else {
      RatFunc d(out.pivots.back());
      if (sign < 0) d = -d;
      for (const auto& mult : cm.row_mult) d /= mult;
      out.det = d;
    }
  }
  return out;
}

int rank_of(const ExactMatrix& m) { return bareiss(m).rank; }

RatFunc det_of(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  return bareiss(m).det;
}

std::vector<std::optional<std::vector<RatFunc>>> solve_coords_many(
    const ExactMatrix& family_rows, const std::vector<std::vector<RatFunc>>& targets) {
  const int nvec = family_rows.rows();
  const int dim = family_rows.cols();
  const int nt = static_cast<int>(targets.size());
  const int width = nvec + nt;
  // One Gauss-Jordan pass over [family^T | all targets].
  std::vector<std::vector<RatFunc>> aug(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    auto& row = aug[static_cast<size_t>(i)];
    row.resize(static_cast<size_t>(width));
    for (int v = 0; v < nvec; ++v) row[static_cast<size_t>(v)] = family_rows.at(v, i);
    for (int t = 0; t < nt; ++t) {
      assert(static_cast<int>(targets[static_cast<size_t>(t)].size()) == dim);
      row[static_cast<size_t>(nvec + t)] = targets[static_cast<size_t>(t)][static_cast<size_t>(i)];
    }
  }
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < nvec && row < dim; ++col) {
    int p = -1;
    for (int i = row; i < dim; ++i)
      if (!aug[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[static_cast<size_t>(p)], aug[static_cast<size_t>(row)]);
    RatFunc inv = aug[static_cast<size_t>(row)][static_cast<size_t>(col)].inverse();
    for (auto& x : aug[static_cast<size_t>(row)]) x *= inv;
    for (int i = 0; i < dim; ++i) {
      if (i == row) continue;
      RatFunc f = aug[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = col; j < width; ++j) {
        const RatFunc& src = aug[static_cast<size_t>(row)][static_cast<size_t>(j)];
        if (!src.is_zero())
          aug[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * src;
      }
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<std::optional<std::vector<RatFunc>>> out(static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    bool consistent = true;
    for (int i = row; i < dim && consistent; ++i)
      if (!aug[static_cast<size_t>(i)][static_cast<size_t>(nvec + t)].is_zero()) consistent = false;
    if (!consistent) continue;
    std::vector<RatFunc> x(static_cast<size_t>(nvec));
    for (int i = 0; i < row; ++i)
      x[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(i)])] =
          aug[static_cast<size_t>(i)][static_cast<size_t>(nvec + t)];
    out[static_cast<size_t>(t)] = std::move(x);
  }
  return out;
}

std::optional<std::vector<RatFunc>> solve_coords(const ExactMatrix& family_rows,
                                                 const std::vector<RatFunc>& target_row) {
  return solve_coords_many(family_rows, {target_row})[0];
}

}  // namespace qaw
