#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pqrs/errors.hpp"
#include "pqrs/rational.hpp"
#include "pqrs/scalar.hpp"
#include "pqrs/serialize.hpp"
#include "support/gen.hpp"

using pqrs::Monomial;
using pqrs::Rational;
using pqrs::Scalar;

TEST_CASE("rational parsing and exact ops") {
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("+4/2").str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), pqrs::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), pqrs::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), pqrs::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), pqrs::ParseError);

  CHECK(Rational(2, 3).pow(-2).str() == "9/4");
  CHECK_THROWS_AS(Rational(0).pow(-1), pqrs::ZeroBaseNegativeExponent);
  CHECK(Rational(9, 4).sqrtExact().value().str() == "3/2");
  CHECK(!Rational(2).sqrtExact().has_value());
  CHECK(!Rational(-4).sqrtExact().has_value());
  CHECK_THROWS_AS(Rational(1) / Rational(0), pqrs::DivisionByZero);
}

TEST_CASE("canonical form and rendering") {
  CHECK(Scalar::zero().str() == "0");
  CHECK(Scalar::one().str() == "1");
  CHECK((Scalar::p() + Scalar::q()).str() == "p + q");
  CHECK((Scalar::p() - Scalar::p()).isZero());
  CHECK((Scalar::p() - Scalar::p()).numTerms() == 0);

  const Scalar s = Scalar::halfTerm(Rational(-3, 2), 1, -4) + Scalar::one();
  CHECK(s.str() == "-3/2 p^1/2 q^-2 + 1");
  CHECK((Scalar::q() - Scalar::p()).str() == "-p + q");
  CHECK(Scalar::halfTerm(Rational(1), -3, 2).str() == "p^-3/2 q");
}

TEST_CASE("ring axioms hold on random sparse values") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = gen::scalar(rng), b = gen::scalar(rng), c = gen::scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Scalar::zero() == a);
    CHECK(a * Scalar::one() == a);
    CHECK((a - a).isZero());
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = gen::scalar(rng), b = gen::nonzeroScalar(rng);
    CHECK((a * b).divExact(b) == a);
  }
  CHECK_THROWS_AS(Scalar::zero().divExact(Scalar::zero()), pqrs::DivisionByZero);
  CHECK_THROWS_AS((Scalar::p() + Scalar::q()).divExact(Scalar::p() - Scalar::q()),
                  pqrs::NotDivisible);
  const Scalar pq = Scalar::p() * Scalar::p() - Scalar::q() * Scalar::q();
  CHECK(pq.divExact(Scalar::p() - Scalar::q()) == Scalar::p() + Scalar::q());
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 100; ++i) {
    const Scalar a = gen::scalar(rng), b = gen::scalar(rng);
    // squares keep half powers exact
    const Rational p0 = gen::nonzeroRational(rng), q0 = gen::nonzeroRational(rng);
    const Rational pp = p0 * p0, qq = q0 * q0;
    CHECK((a + b).substitute(pp, qq) == a.substitute(pp, qq) + b.substitute(pp, qq));
    CHECK((a * b).substitute(pp, qq) == a.substitute(pp, qq) * b.substitute(pp, qq));
  }
  CHECK_THROWS_AS(Scalar::halfTerm(1, 1, 0).substitute(Rational(2), Rational(1)),
                  pqrs::HalfPowerOfNonSquare);
  CHECK(Scalar::halfTerm(1, 1, 0).substitute(Rational(4), Rational(1)) == Rational(2));
  CHECK_THROWS_AS(Scalar::halfTerm(1, -2, 0).substitute(Rational(0), Rational(1)),
                  pqrs::ZeroBaseNegativeExponent);
}

TEST_CASE("exponent maps compose as expected") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 100; ++i) {
    const Scalar a = gen::scalar(rng);
    CHECK(a.swapPQ().swapPQ() == a);
    CHECK(a.negatedExponents().negatedExponents() == a);
    CHECK(a.swapPQ().atPOne() == a.atQOne().swapPQ().atPOne());
    CHECK(a.pToQInverse().atPOne() == a.pToQInverse());
  }
  CHECK(Scalar::p().pToQInverse() == Scalar::qPow(-1));
  CHECK(Scalar::q().pToQInverse() == Scalar::q());
  CHECK(Scalar::p().atPOne() == Scalar::one());
}

TEST_CASE("json round trip preserves values exactly") {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 100; ++i) {
    const Scalar a = gen::scalar(rng);
    CHECK(pqrs::scalarFromJson(pqrs::toJson(a)) == a);
  }
  CHECK_THROWS_AS(pqrs::scalarFromJson(nlohmann::json{{"terms", "nope"}}), pqrs::ParseError);
  CHECK_THROWS_AS(pqrs::scalarFromJson(nlohmann::json::parse("[1,2]")), pqrs::ParseError);
}
