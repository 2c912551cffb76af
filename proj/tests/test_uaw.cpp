#include <atomic>
#include <thread>

#include "doctest.h"
#include "qaw/hall.hpp"
#include "qaw/uaw.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

namespace {
RatFunc q() { return rf_q(); }
RatFunc qi() { return rf_qinv(); }
UawElement nfw(uint32_t i, uint32_t j, uint32_t k, uint32_t r = 0, uint32_t s = 0,
               uint32_t t = 0) {
  return UawElement::term({i, j, k, r, s, t});
}
}  // namespace

TEST_CASE("the three reduction rules, coefficient for coefficient") {
  Uaw u;
  CHECK(u.reduce_word("BA") == nfw(1, 1, 0) * (q() * q()) + nfw(0, 0, 1) * (q().pow(3) - qi()) -
                                   nfw(0, 0, 0, 0, 0, 1) * (q() * q() - RatFunc(1)));
  CHECK(u.reduce_word("CA") == nfw(1, 0, 1) * (qi() * qi()) - nfw(0, 1, 0) * (q() - qi().pow(3)) +
                                   nfw(0, 0, 0, 0, 1, 0) * (RatFunc(1) - qi() * qi()));
  CHECK(u.reduce_word("CB") == nfw(0, 1, 1) * (q() * q()) + nfw(1, 0, 0) * (q().pow(3) - qi()) -
                                   nfw(0, 0, 0, 1, 0, 0) * (q() * q() - RatFunc(1)));
}

TEST_CASE("irreducible words stay put") {
  Uaw u;
  CHECK(u.reduce_word("AABC") == nfw(2, 1, 1));
  CHECK(u.reduce_word("ABBC") == nfw(1, 2, 1));
  CHECK(u.reduce_word("") == UawElement::one());
}

TEST_CASE("reduction is strategy independent (worked example and samples)") {
  Uaw left(ReductionRules::standard(), Uaw::Strategy::LeftmostInversion);
  Uaw right(ReductionRules::standard(), Uaw::Strategy::RightmostInversion);
  CHECK(left.reduce_word("CABA") == right.reduce_word("CABA"));
  for (int i = 0; i < 200; ++i) {
    Word w = sampling::random_word(0xD1A40 + static_cast<uint64_t>(i), 8);
    CHECK(left.reduce_word(w.letters()) == right.reduce_word(w.letters()));
  }
}

TEST_CASE("multiplication and bracket") {
  Uaw u;
  CHECK(u.mul(u.A(), u.B()) == nfw(1, 1, 0));
  CHECK(u.bracket(u.A(), u.alpha()).is_zero());
  CHECK(u.bracket(u.B(), u.A()) ==
        nfw(1, 1, 0) * (q() * q() - RatFunc(1)) + nfw(0, 0, 1) * (q().pow(3) - qi()) -
            nfw(0, 0, 0, 0, 0, 1) * (q() * q() - RatFunc(1)));
}

TEST_CASE("associativity after reduction on seeded random monomials") {
  Uaw u;
  for (int i = 0; i < 100; ++i) {
    uint64_t s = 0xACC + static_cast<uint64_t>(i);
    UawElement x = u.reduce(sampling::random_word(3 * s, 2));
    UawElement y = u.reduce(sampling::random_word(3 * s + 1, 2));
    UawElement z = u.reduce(sampling::random_word(3 * s + 2, 2));
    CHECK(u.mul(u.mul(x, y), z) == u.mul(x, u.mul(y, z)));
  }
}

TEST_CASE("defining combinations reduce to the central generators") {
  Uaw u;
  CHECK(u.reduce(Uaw::alpha_free()) == u.alpha());
  CHECK(u.reduce(Uaw::beta_free()) == u.beta());
  CHECK(u.reduce(Uaw::gamma_free()) == u.gamma());
}

TEST_CASE("the nine relators vanish") {
  Uaw u;
  for (int i = 0; i < 9; ++i) CHECK(u.reduce(Uaw::r_free(i)).is_zero());
}

TEST_CASE("six Casimir expressions coincide, are central, of degree 3") {
  Uaw u;
  for (int n = 1; n < 6; ++n) CHECK(u.omega_form(n) == u.omega());
  CHECK(Uaw::filtration_degree(u.omega()) == 3);
  for (const auto& g : {u.A(), u.B(), u.C()}) CHECK(u.bracket(g, u.omega()).is_zero());
  // and the free-algebra versions agree with the slot versions after reduction
  for (int n = 0; n < 6; ++n) CHECK(u.reduce(Uaw::omega_free(n)) == u.omega());
}

TEST_CASE("centrality of the central generators") {
  Uaw u;
  for (const auto& z : {u.alpha(), u.beta(), u.gamma()})
    for (const auto& g : {u.A(), u.B(), u.C()}) CHECK(u.bracket(g, z).is_zero());
}

TEST_CASE("filtration degree") {
  Uaw u;
  CHECK(Uaw::filtration_degree(u.A()) == 1);
  CHECK_THROWS_AS(Uaw::filtration_degree(UawElement{}), ZeroArgument);
  // [BA] - q(q - q^-1) AB lies in Delta_1
  UawElement x = u.bracket(u.B(), u.A()) - nfw(1, 1, 0) * (q() * rf_qminus());
  CHECK(Uaw::filtration_degree(x) <= 1);
}

TEST_CASE("filtration is multiplicative on basis monomials") {
  Uaw u;
  for (int i = 0; i < 50; ++i) {
    UawElement x = u.reduce(sampling::random_word(0xF117 + 2 * static_cast<uint64_t>(i), 3));
    UawElement y = u.reduce(sampling::random_word(0xF118 + 2 * static_cast<uint64_t>(i), 3));
    if (x.is_zero() || y.is_zero()) continue;
    uint32_t dx = Uaw::filtration_degree(x), dy = Uaw::filtration_degree(y);
    UawElement xy = u.mul(x, y);
    if (!xy.is_zero()) CHECK(Uaw::filtration_degree(xy) <= dx + dy);
  }
  // equality on basis monomials
  CHECK(Uaw::filtration_degree(u.mul(nfw(1, 2, 0, 1, 0, 0), nfw(0, 1, 1))) == 6);
}

TEST_CASE("omega basis conversions") {
  Uaw u;
  // A^2 is already an Omega-basis vector
  OmegaElement a2 = u.to_omega_basis(nfw(2, 0, 0));
  REQUIRE(a2.terms().size() == 1);
  CHECK(a2.terms().begin()->first == OmegaWord{2, 0, 0, 0, 0, 0, 0});
  // Omega itself
  OmegaElement om = u.to_omega_basis(u.omega());
  REQUIRE(om.terms().size() == 1);
  CHECK(om.terms().begin()->first == OmegaWord{0, 0, 0, 1, 0, 0, 0});
  CHECK(u.from_omega_basis(om) == u.omega());
  // ABC = q^-1 Om - q A^2 - q^-3 B^2 - q C^2 + A al + q^-2 B be + C ga
  OmegaElement abc = u.to_omega_basis(nfw(1, 1, 1));
  OmegaElement expect;
  expect.add_term({0, 0, 0, 1, 0, 0, 0}, qi());
  expect.add_term({2, 0, 0, 0, 0, 0, 0}, -q());
  expect.add_term({0, 2, 0, 0, 0, 0, 0}, -qi().pow(3));
  expect.add_term({0, 0, 2, 0, 0, 0, 0}, -q());
  expect.add_term({1, 0, 0, 0, 1, 0, 0}, RatFunc(1));
  expect.add_term({0, 1, 0, 0, 0, 1, 0}, qi() * qi());
  expect.add_term({0, 0, 1, 0, 0, 0, 1}, RatFunc(1));
  CHECK(abc == expect);
}

TEST_CASE("omega basis round trip on random elements") {
  Uaw u;
  for (int i = 0; i < 40; ++i) {
    UawElement x = sampling::random_uaw(0x0A56A + static_cast<uint64_t>(i), 5, 4);
    CHECK(u.from_omega_basis(u.to_omega_basis(x)) == x);
  }
}

TEST_CASE("rho and sigma generate the action") {
  Uaw u;
  CHECK(u.rho(u.A()) == u.B());
  CHECK(u.rho(u.alpha()) == u.beta());
  for (const auto& g : {u.A(), u.B(), u.C(), u.alpha(), u.beta(), u.gamma()}) {
    CHECK(u.rho(u.rho(u.rho(g))) == g);
    CHECK(u.sigma(u.sigma(g)) == g);
  }
  CHECK(u.rho(u.omega()) == u.omega());
  CHECK(u.sigma(u.omega()) == u.omega());
  // sigma(C) = C + [A,B]/(q - q^-1), already in normal form coordinates
  UawElement sc = u.sigma(u.C());
  CHECK(sc == u.C() + u.bracket(u.A(), u.B()) * rf_qminus().inverse());
}

TEST_CASE("rho and sigma are multiplicative") {
  Uaw u;
  for (int i = 0; i < 25; ++i) {
    UawElement x = sampling::random_uaw(0x2110 + 2 * static_cast<uint64_t>(i), 3, 2);
    UawElement y = sampling::random_uaw(0x2111 + 2 * static_cast<uint64_t>(i), 3, 2);
    CHECK(u.rho(u.mul(x, y)) == u.mul(u.rho(x), u.rho(y)));
    CHECK(u.sigma(u.mul(x, y)) == u.mul(u.sigma(x), u.sigma(y)));
  }
}

TEST_CASE("rho preserves the filtration degree of normal words of degree <= 5") {
  Uaw u;
  for (uint32_t i = 0; i <= 5; ++i)
    for (uint32_t j = 0; i + j <= 5; ++j)
      for (uint32_t k = 0; i + j + k <= 5; ++k)
        for (uint32_t r = 0; i + j + k + r <= 5; ++r)
          for (uint32_t s = 0; i + j + k + r + s <= 5; ++s)
            for (uint32_t t = 0; i + j + k + r + s + t <= 5; ++t) {
              if (i + j + k + r + s + t == 0) continue;
              UawElement w = nfw(i, j, k, r, s, t);
              CHECK(Uaw::filtration_degree(u.rho(w)) == i + j + k + r + s + t);
            }
}

TEST_CASE("psi images") {
  Uaw u;
  CommPoly a = CommPoly::term({1, 0, 0}), b = CommPoly::term({0, 1, 0}),
           c = CommPoly::term({0, 0, 1});
  CHECK(u.psi(u.alpha()) == a * rf_qplus() + b * c);
  CHECK(u.psi(u.beta()) == b * rf_qplus() + a * c);
  CHECK(u.psi(u.gamma()) == c * rf_qplus() + a * b);
  // the cubic term of the Casimir image carries a minus sign
  CHECK(u.psi(u.omega()) == a * b * c * -rf_qplus() - a * a - b * b - c * c);
  // commutative images kill every bracket
  for (int i = 0; i < 30; ++i) {
    UawElement x = sampling::random_uaw(0x9510 + 2 * static_cast<uint64_t>(i), 3, 2);
    UawElement y = sampling::random_uaw(0x9511 + 2 * static_cast<uint64_t>(i), 3, 2);
    CHECK(u.psi(u.bracket(x, y)).is_zero());
    CHECK(u.psi(u.mul(x, y)) == u.psi(x) * u.psi(y));
  }
}

TEST_CASE("perturbed rule sets change the corresponding normal form") {
  ReductionRules base = ReductionRules::standard();
  Uaw reference(base);
  const char* words[3] = {"BA", "CA", "CB"};
  for (int pair = 0; pair < 3; ++pair)
    for (int which = 0; which < 3; ++which) {
      Uaw mutant(base.perturbed(pair, which));
      CHECK_FALSE(mutant.reduce_word(words[pair]) == reference.reduce_word(words[pair]));
    }
}

TEST_CASE("shared engines are safe under concurrent use") {
  Uaw shared;
  Uaw reference;
  std::vector<Word> words;
  for (int i = 0; i < 80; ++i) words.push_back(sampling::random_word(0xCC + static_cast<uint64_t>(i), 7));
  std::vector<UawElement> expected;
  for (const auto& w : words) expected.push_back(reference.reduce_word(w.letters()));
  std::atomic<int> mismatches{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (size_t i = static_cast<size_t>(t); i < words.size(); i += 4)
        if (!(shared.reduce_word(words[i].letters()) == expected[i])) ++mismatches;
    });
  for (auto& th : threads) th.join();
  CHECK(mismatches == 0);
}

TEST_CASE("normal word printing") {
  Uaw u;
  CHECK(nfw(2, 1, 0, 0, 1, 0).str() == "A^2 B be");
  CHECK(UawElement::one().str() == "1");
  CHECK(u.reduce_word("BA").str() ==
        "(1 - q^2) ga + (-q^-1 + q^3) C + q^2 A B");
}
