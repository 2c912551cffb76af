#include "doctest.h"
#include "qaw/hall.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

namespace {
LieTreePtr leaf(char c) { return LieTree::leaf(c); }
LieTreePtr br(LieTreePtr a, LieTreePtr b) { return LieTree::node(std::move(a), std::move(b)); }
}  // namespace

TEST_CASE("lie_compare follows the monomial order") {
  auto BA = br(leaf('B'), leaf('A'));
  auto CA = br(leaf('C'), leaf('A'));
  CHECK(lie_compare(*BA, *CA) < 0);   // same right child, B < C on the left
  CHECK(lie_compare(*leaf('C'), *BA) < 0);  // shorter first
  CHECK(lie_compare(*CA, *CA) == 0);
  // right child decides before the left child
  auto CB = br(leaf('C'), leaf('B'));
  CHECK(lie_compare(*CA, *CB) < 0);
}

TEST_CASE("is_hall") {
  CHECK(is_hall(*br(br(leaf('B'), leaf('A')), leaf('C'))));
  CHECK_FALSE(is_hall(*br(leaf('A'), leaf('B'))));
  CHECK(is_hall(*br(br(leaf('C'), leaf('B')), br(leaf('B'), leaf('A')))));
  // condition 2 violation: [[B,C?]...]; [[C,B],A] has Y = B > A
  CHECK_FALSE(is_hall(*br(br(leaf('C'), leaf('B')), leaf('A'))));
}

TEST_CASE("generation counts follow the Witt formula") {
  HallBasis hb(6);
  CHECK(hb.count_of_length(1) == 3);
  CHECK(hb.count_of_length(2) == 3);
  CHECK(hb.count_of_length(3) == 8);
  CHECK(hb.count_of_length(4) == 18);
  CHECK(hb.count_of_length(5) == 48);
  CHECK(hb.count_of_length(6) == 116);
  CHECK(hb.first_of_length(5) == 33);
  CHECK(hb.first_of_length(6) == 81);
}

TEST_CASE("enumeration pins") {
  HallBasis hb(5);
  CHECK(hb.tree(1)->str() == "A");
  CHECK(hb.tree(4)->str() == "[B,A]");
  CHECK(hb.tree(5)->str() == "[C,A]");
  CHECK(hb.tree(6)->str() == "[C,B]");
  CHECK(hb.tree(12)->str() == "[[B,A],C]");
  CHECK(hb.tree(18)->str() == "[[[C,A],A],B]");
  CHECK(hb.tree(30)->str() == "[[C,A],[B,A]]");
  CHECK(hb.tree(31)->str() == "[[C,B],[B,A]]");
  CHECK(hb.tree(32)->str() == "[[C,B],[C,A]]");
  CHECK(hb.tree(57)->str() == "[[[B,A],A],[B,A]]");
  CHECK(hb.tree(72)->str() == "[[[C,B],C],[C,A]]");
  // indexing is stable across regeneration
  HallBasis hb2(3);
  hb2.ensure(5);
  for (int i = 1; i <= hb.size(); ++i) CHECK(hb2.tree(i)->str() == hb.tree(i)->str());
}

TEST_CASE("index_of inverts the enumeration") {
  HallBasis hb(5);
  for (int i = 1; i <= hb.size(); ++i) CHECK(hb.index_of(*hb.tree(i)) == i);
  CHECK_FALSE(hb.index_of(*br(leaf('A'), leaf('B'))).has_value());
}

TEST_CASE("left-normed bracketing") {
  CHECK(LieTree::left_normed(Word("BAC"))->str() == "[[B,A],C]");
  CHECK(LieTree::left_normed(Word("A"))->str() == "A");
  CHECK(LieTree::left_normed(Word("CAAB"))->str() == "[[[C,A],A],B]");
  CHECK_THROWS_AS(LieTree::left_normed(Word()), EmptyWord);
}

TEST_CASE("expansion") {
  CHECK(expand(*br(leaf('B'), leaf('A'))) ==
        FreeElement::word(Word("BA")) - FreeElement::word(Word("AB")));
  FreeElement bac = expand(*LieTree::left_normed(Word("BAC")));
  CHECK(bac == FreeElement::word(Word("BAC")) - FreeElement::word(Word("ABC")) -
                   FreeElement::word(Word("CBA")) + FreeElement::word(Word("CAB")));
}

TEST_CASE("leading word coefficient of a Hall expansion is a unit") {
  HallBasis hb(5);
  for (int i = 1; i <= 80; ++i) {
    const FreeElement& e = hb.expansion(i);
    // the first word in (length, lex) order has coefficient +-1
    RatFunc lead = e.terms().begin()->second;
    CHECK((lead == RatFunc(1) || lead == RatFunc(-1)));
  }
}

TEST_CASE("theta negates expanded Hall elements") {
  HallBasis hb(5);
  for (int i = 1; i <= 80; ++i) CHECK(theta(hb.expansion(i)) == -hb.expansion(i));
}

TEST_CASE("expanded Hall elements of each length are linearly independent") {
  HallBasis hb(5);
  for (int len = 1; len <= 5; ++len) {
    std::vector<FreeElement> fam;
    for (int i = hb.first_of_length(len); i < hb.first_of_length(len + 1); ++i)
      fam.push_back(hb.expansion(i));
    auto basis = basis_from_support(fam, std::less<Word>{}, Word{});
    CHECK(rank_of(expansion_matrix(fam, basis)) == static_cast<int>(fam.size()));
  }
}

TEST_CASE("rewrite: antisymmetry base cases") {
  HallBasis hb(4);
  LieSeries s = hb.rewrite(*br(leaf('A'), leaf('B')));
  CHECK(s.terms().size() == 1);
  CHECK(s.coeff(4) == RatFunc(-1));
  // [[B,A],[C,A]] -> -[[C,A],[B,A]] = -H30
  LieSeries t = hb.rewrite(*br(br(leaf('B'), leaf('A')), br(leaf('C'), leaf('A'))));
  CHECK(t.terms().size() == 1);
  CHECK(t.coeff(30) == RatFunc(-1));
  CHECK(hb.rewrite(*br(leaf('A'), leaf('A'))).is_zero());
}

TEST_CASE("rewrite inverts expansion and matches the solve oracle") {
  HallBasis hb(6);
  for (int i = 0; i < 100; ++i) {
    LieTreePtr t = sampling::random_tree(0xBEEF + static_cast<uint64_t>(i), 6);
    LieSeries s = hb.rewrite(*t);
    FreeElement direct = expand(*t);
    CHECK(hb.realize(s) == direct);
    auto solved = hb.coords_by_solve(direct);
    REQUIRE(solved.has_value());
    CHECK(*solved == s);
  }
}

TEST_CASE("coords_by_solve rejects elements outside the free Lie algebra") {
  HallBasis hb(3);
  FreeElement ab = FreeElement::word(Word("AB"));
  FreeElement ba = FreeElement::word(Word("BA"));
  CHECK(hb.coords_by_solve(ab + ba) == std::nullopt);
  auto ok = hb.coords_by_solve(ab - ba);
  REQUIRE(ok.has_value());
  CHECK(ok->coeff(4) == RatFunc(-1));
  CHECK(hb.coords_by_solve(FreeElement::one()) == std::nullopt);
}

TEST_CASE("series printing") {
  HallBasis hb(2);
  LieSeries s = hb.rewrite(*br(leaf('A'), leaf('B')));
  CHECK(s.str() == "-H4");
}
