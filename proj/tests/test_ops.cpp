#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pqrs/errors.hpp"
#include "pqrs/ops.hpp"
#include "pqrs/poly.hpp"
#include "pqrs/pqcore.hpp"
#include "support/gen.hpp"

using pqrs::Monomial;
using pqrs::Scalar;
using pqrs::XPoly;

TEST_CASE("difference operators lower monomials with deformed weights") {
  for (int k = 1; k <= 8; ++k) {
    const XPoly xk = XPoly::monomial(k, Scalar::one());
    CHECK(pqrs::dPq(xk) == XPoly::monomial(k - 1, pqrs::pqNumber(k)));
    CHECK(pqrs::dQ(xk) == XPoly::monomial(k - 1, pqrs::pqNumber(k).atPOne()));
  }
  CHECK(pqrs::dPq(XPoly::one()).isZero());
  CHECK(pqrs::dPq(XPoly::zero()).isZero());
}

TEST_CASE("difference operator matches its divided-difference definition") {
  std::mt19937_64 rng(111);
  const Scalar pMinusQ = Scalar::p() - Scalar::q();
  for (int i = 0; i < 200; ++i) {
    const XPoly f = gen::xpoly(rng);
    const XPoly lhs = (pMinusQ * pqrs::dPq(f)).mulXPow(1);
    const XPoly rhs = pqrs::eta(f, Monomial::p()) - pqrs::eta(f, Monomial::q());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("deformed Leibniz rule") {
  std::mt19937_64 rng(222);
  for (int i = 0; i < 100; ++i) {
    const XPoly f = gen::xpoly(rng, 5), g = gen::xpoly(rng, 5);
    const XPoly lhs = pqrs::dPq(f * g);
    const XPoly rhs =
        pqrs::eta(f, Monomial::p()) * pqrs::dPq(g) + pqrs::dPq(f) * pqrs::eta(g, Monomial::q());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("scale substitution acts coefficient-by-degree") {
  std::mt19937_64 rng(333);
  for (int i = 0; i < 100; ++i) {
    const XPoly f = gen::xpoly(rng, 6);
    const XPoly g = pqrs::eta(f, Monomial::p());
    for (int k = 0; k <= f.degree(); ++k) {
      CHECK(g.coeff(k) == f.coeff(k) * Scalar::pPow(k));
    }
    CHECK(pqrs::eta(pqrs::eta(f, Monomial::p()), Monomial::pInverse()) == f);
  }
}

TEST_CASE("raising from degree n produces the next family member") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(pqrs::raisePq(n, pqrs::pqRsPoly(n)) == pqrs::pqRsPoly(n + 1));
    CHECK(pqrs::raiseQ(pqrs::rsPoly(n)) == pqrs::rsPoly(n + 1));
  }
  // the raising map is degree-indexed; a mismatched index is a different map
  CHECK(pqrs::raisePq(2, pqrs::pqRsPoly(1)) != pqrs::pqRsPoly(2));
}

TEST_CASE("recurrence and ladder reports pass through degree ten") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(pqrs::checkRecurrencePqro(n).pass);
    CHECK(pqrs::checkQRecurrence(n).pass);
    for (int k = 0; k <= n + 1; ++k) CHECK(pqrs::checkQid(n, k).pass);
  }
  CHECK_THROWS_AS(pqrs::checkRecurrencePqro(0), pqrs::PreconditionViolated);
  CHECK_THROWS_AS(pqrs::checkQid(2, 4), pqrs::PreconditionViolated);

  const std::vector<std::string> ladderNames = {
      "ladder-lowering",        "ladder-raising",
      "ladder-number-product",  "ladder-shifted-number-product",
      "ladder-q-commutation",   "ladder-p-commutation"};
  for (int n = 0; n <= 10; ++n) {
    const auto reps = pqrs::checkLadderSuite(n);
    REQUIRE(reps.size() == ladderNames.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(reps[i].name == ladderNames[i]);
      CHECK(reps[i].pass);
      CHECK(reps[i].residual.isZero());
    }
    const auto qreps = pqrs::checkQLadderSuite(n);
    REQUIRE(qreps.size() == 5);
    CHECK(qreps[4].name == "q-ladder-unit-commutation");
    for (const auto& r : qreps) CHECK(r.pass);
  }
}

TEST_CASE("difference equations annihilate the family") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(pqrs::checkDiffeq(n).pass);
    CHECK(pqrs::checkQDiffeq(n).pass);
  }
}

TEST_CASE("iterated lowering terminates in the factorial") {
  for (int n = 0; n <= 8; ++n) {
    const auto reps = pqrs::checkNilpotency(n);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].name == "d-full-lowering");
    CHECK(reps[1].name == "d-nilpotent-order");
    CHECK(reps[0].pass);
    CHECK(reps[1].pass);
  }
}

TEST_CASE("p equal one slices reproduce the single-parameter operators") {
  std::mt19937_64 rng(444);
  for (int i = 0; i < 50; ++i) {
    const XPoly f = gen::xpoly(rng, 6);
    const XPoly viaPq = pqrs::dPq(f).mapCoeffs([](const Scalar& c) { return c.atPOne(); });
    const XPoly fAtP1 = f.mapCoeffs([](const Scalar& c) { return c.atPOne(); });
    CHECK(viaPq == pqrs::dQ(fAtP1));
  }
}
