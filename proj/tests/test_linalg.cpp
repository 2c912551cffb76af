#include "doctest.h"
#include "qaw/linalg.hpp"
#include "qaw/uaw.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<RatFunc>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("expansion matrix over an indexed basis") {
  Uaw u;
  std::vector<UawElement> gens = {u.A(), u.B(), u.C()};
  auto basis = basis_from_support(gens, std::less<NormalWord>{}, NormalWord{});
  ExactMatrix m = expansion_matrix(gens, basis);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 3);
  CHECK(rank_of(m) == 3);
  CHECK(det_of(m) * det_of(m) == RatFunc(1));  // a permutation matrix
  CHECK(det_of(from_rows({{RatFunc(1), RatFunc(0)}, {RatFunc(0), RatFunc(1)}})) == RatFunc(1));

  std::vector<UawElement> pair = {u.mul(u.A(), u.B()) + u.mul(u.B(), u.A()),
                                  u.mul(u.A(), u.B()) - u.mul(u.B(), u.A())};
  // AB + BA and AB - BA both reduce to combinations of AB, C, ga
  auto basis2 = basis_from_support(pair, std::less<NormalWord>{}, NormalWord{});
  CHECK(rank_of(expansion_matrix(pair, basis2)) == 2);
}

TEST_CASE("free-algebra expansion over a word basis") {
  FreeElement ab = FreeElement::word(Word("AB")), ba = FreeElement::word(Word("BA"));
  std::vector<FreeElement> vecs = {ab + ba, ab - ba};
  BasisIndex<Word> basis;
  basis.add(Word("AB"));
  basis.add(Word("BA"));
  ExactMatrix m = expansion_matrix(vecs, basis);
  CHECK(m.at(0, 0) == RatFunc(1));
  CHECK(m.at(0, 1) == RatFunc(1));
  CHECK(m.at(1, 0) == RatFunc(1));
  CHECK(m.at(1, 1) == RatFunc(-1));
  CHECK(rank_of(m) == 2);
}

TEST_CASE("missing basis label") {
  Uaw u;
  std::vector<UawElement> gens = {u.A(), u.B()};
  auto basis = basis_from_support(gens, std::less<NormalWord>{}, NormalWord{});
  std::vector<UawElement> bad = {u.C()};
  CHECK_THROWS_AS(expansion_matrix(bad, basis), MissingBasisLabel);
}

TEST_CASE("determinant examples") {
  RatFunc q = rf_q(), qi = rf_qinv();
  CHECK(det_of(from_rows({{q, RatFunc(1)}, {RatFunc(1), qi}})).is_zero());
  CHECK(det_of(from_rows({{q * q, RatFunc(0)}, {RatFunc(5), qi * qi}})) == RatFunc(1));
  CHECK(rank_of(from_rows({{q, RatFunc(1)}, {RatFunc(1), qi}})) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
  for (int i = 0; i < 20; ++i) {
    ExactMatrix m(3, 4);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c)
        m.at(r, c) = sampling::random_scalar(777 + 12 * static_cast<uint64_t>(i) +
                                             static_cast<uint64_t>(4 * r + c));
    CHECK(rank_of(m) == rank_of(m.transposed()));
  }
}

TEST_CASE("determinant is multiplicative on seeded random 3x3 pairs") {
  auto matmul = [](const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) {
        RatFunc s;
        for (int k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  };
  for (int i = 0; i < 50; ++i) {
    ExactMatrix a(3, 3), b(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        a.at(r, c) = sampling::random_scalar(3000 + 18 * static_cast<uint64_t>(i) +
                                             static_cast<uint64_t>(3 * r + c));
        b.at(r, c) = sampling::random_scalar(3009 + 18 * static_cast<uint64_t>(i) +
                                             static_cast<uint64_t>(3 * r + c));
      }
    CHECK(det_of(matmul(a, b)) == det_of(a) * det_of(b));
  }
}

TEST_CASE("elimination pivots are recorded") {
  RatFunc q = rf_q();
  auto e = bareiss(from_rows({{q, RatFunc(1)}, {RatFunc(0), q * q - RatFunc(1)}}));
  CHECK(e.rank == 2);
  CHECK(e.pivots.size() == 2);
}

TEST_CASE("solve_coords finds exact coordinates") {
  Uaw u;
  std::vector<UawElement> fam = {u.A(), u.B()};
  std::vector<UawElement> all = fam;
  all.push_back(u.A() * rf_qplus() - u.B());
  auto basis = basis_from_support(all, std::less<NormalWord>{}, NormalWord{});
  ExactMatrix m = expansion_matrix(fam, basis);

  std::vector<RatFunc> target(static_cast<size_t>(basis.size()));
  for (const auto& [w, c] : all[2].terms()) target[static_cast<size_t>(*basis.find(w))] = c;
  auto sol = solve_coords(m, target);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == rf_qplus());
  CHECK((*sol)[1] == RatFunc(-1));

  // A is (1, 0) against the family
  std::vector<RatFunc> ta(static_cast<size_t>(basis.size()));
  UawElement gen_a = u.A();
  for (const auto& [w, c] : gen_a.terms()) ta[static_cast<size_t>(*basis.find(w))] = c;
  auto sa = solve_coords(m, ta);
  REQUIRE(sa.has_value());
  CHECK((*sa)[0] == RatFunc(1));
  CHECK((*sa)[1].is_zero());

  // AB is outside the span of A and B
  UawElement ab = u.mul(u.A(), u.B());
  std::vector<UawElement> with_ab = fam;
  with_ab.push_back(ab);
  auto basis2 = basis_from_support(with_ab, std::less<NormalWord>{}, NormalWord{});
  ExactMatrix m2 = expansion_matrix(fam, basis2);
  std::vector<RatFunc> tb(static_cast<size_t>(basis2.size()));
  for (const auto& [w, c] : ab.terms()) tb[static_cast<size_t>(*basis2.find(w))] = c;
  CHECK_FALSE(solve_coords(m2, tb).has_value());
}

TEST_CASE("every family member solves with a unit coordinate vector") {
  Uaw u;
  std::vector<UawElement> fam = {u.A(), u.mul(u.A(), u.B()), u.omega(), u.alpha()};
  auto basis = basis_from_support(fam, std::less<NormalWord>{}, NormalWord{});
  ExactMatrix m = expansion_matrix(fam, basis);
  for (size_t v = 0; v < fam.size(); ++v) {
    std::vector<RatFunc> t(static_cast<size_t>(basis.size()));
    for (const auto& [w, c] : fam[v].terms()) t[static_cast<size_t>(*basis.find(w))] = c;
    auto sol = solve_coords(m, t);
    REQUIRE(sol.has_value());
    for (size_t i = 0; i < sol->size(); ++i)
      CHECK((*sol)[i] == (i == v ? RatFunc(1) : RatFunc(0)));
  }
}
