#include "doctest.h"
#include "qaw/freealg.hpp"
#include "qaw/uaw.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

namespace {
FreeElement A() { return FreeElement::letter('A'); }
FreeElement B() { return FreeElement::letter('B'); }
FreeElement C() { return FreeElement::letter('C'); }
}  // namespace

TEST_CASE("concatenation product") {
  CHECK(FreeElement::word(Word("AB")) * C() == FreeElement::word(Word("ABC")));
  CHECK((A() + B()) * C() == FreeElement::word(Word("AC")) + FreeElement::word(Word("BC")));
  CHECK(FreeElement::one() * FreeElement::word(Word("CAB")) == FreeElement::word(Word("CAB")));
}

TEST_CASE("bracket") {
  CHECK(lie_bracket(A(), B()) ==
        FreeElement::word(Word("AB")) - FreeElement::word(Word("BA")));
  CHECK(lie_bracket(A(), A()).is_zero());
  CHECK(lie_bracket(FreeElement::word(Word("AB")), C()) ==
        FreeElement::word(Word("ABC")) - FreeElement::word(Word("CAB")));
}

TEST_CASE("theta") {
  CHECK(theta(FreeElement::word(Word("ABC"))) == FreeElement::word(Word("CBA"), RatFunc(-1)));
  CHECK(theta(lie_bracket(A(), B())) == -lie_bracket(A(), B()));
  CHECK(theta(FreeElement::one()) == FreeElement::one());
}

TEST_CASE("coeff is the bilinear form against words") {
  FreeElement f = lie_bracket(A(), B());
  CHECK(f.coeff(Word("AB")) == RatFunc(1));
  CHECK(f.coeff(Word("BA")) == RatFunc(-1));
  CHECK(f.coeff(Word("CC")).is_zero());
}

TEST_CASE("homogeneous parts") {
  FreeElement f = A() + FreeElement::word(Word("AB"));
  CHECK(f.homogeneous_part(1) == A());
  CHECK(f.homogeneous_part(2) == FreeElement::word(Word("AB")));
  CHECK(f.homogeneous_part(0).is_zero());
  CHECK(f.homogeneous_part(1) + f.homogeneous_part(2) == f);
}

TEST_CASE("grading under the product") {
  for (int i = 0; i < 30; ++i) {
    FreeElement f = sampling::random_free(900 + 2 * i, 3, 2).homogeneous_part(2);
    FreeElement g = sampling::random_free(901 + 2 * i, 3, 2).homogeneous_part(3);
    FreeElement prod = f * g;
    CHECK(prod.homogeneous_part(5) == prod);
  }
}

TEST_CASE("Jacobi identity on seeded random triples") {
  for (int i = 0; i < 100; ++i) {
    FreeElement f = sampling::random_free(100 + 3 * i, 4, 2);
    FreeElement g = sampling::random_free(101 + 3 * i, 4, 2);
    FreeElement h = sampling::random_free(102 + 3 * i, 4, 2);
    FreeElement jac = lie_bracket(lie_bracket(f, g), h) + lie_bracket(lie_bracket(g, h), f) +
                      lie_bracket(lie_bracket(h, f), g);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("theta is an involution and an anti-automorphism") {
  for (int i = 0; i < 50; ++i) {
    FreeElement f = sampling::random_free(500 + 2 * i, 4, 3);
    FreeElement g = sampling::random_free(501 + 2 * i, 4, 3);
    CHECK(theta(theta(f)) == f);
    CHECK(theta(f * g) == theta(g) * theta(f));
  }
}

TEST_CASE("words reject foreign letters") {
  CHECK_THROWS_AS(Word("AXB"), std::invalid_argument);
}

TEST_CASE("word inversion counts match the worked examples") {
  CHECK(Word("CABA").inversions() == 4);
  CHECK(Word("CBBA").inversions() == 5);
  CHECK(Word("AABC").inversions() == 0);
}

TEST_CASE("printing") {
  CHECK((A() * rf_qminus() - FreeElement::word(Word("BC"))).str() == "(-q^-1 + q)*A - BC");
  CHECK(FreeElement::one().str() == "1");
  CHECK(FreeElement::zero().str() == "0");
}
