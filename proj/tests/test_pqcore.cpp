#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "pqrs/errors.hpp"
#include "pqrs/pqcore.hpp"
#include "pqrs/serialize.hpp"
#include "support/gen.hpp"

using pqrs::Rational;
using pqrs::Scalar;

namespace {

// Number of partitions of j with at most rows parts, each part at most width.
// Direct recursive enumeration; the memo key packs (j, width, rows).
long long boxPartitions(int j, int width, int rows) {
  static std::map<std::tuple<int, int, int>, long long> memo;
  if (j == 0) return 1;
  if (j < 0 || width == 0 || rows == 0) return 0;
  const auto key = std::make_tuple(j, width, rows);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long long total = 0;
  for (int first = 1; first <= width && first <= j; ++first) {
    total += boxPartitions(j - first, first, rows - 1);
  }
  memo[key] = total;
  return total;
}

}  // namespace

TEST_CASE("deformed numbers match their closed forms") {
  CHECK(pqrs::pqNumber(0).isZero());
  CHECK(pqrs::pqNumber(1).isOne());
  CHECK(pqrs::pqNumber(2) == Scalar::p() + Scalar::q());
  CHECK(pqrs::pqNumber(5).str() == "p^4 + p^3 q + p^2 q^2 + p q^3 + q^4");
  CHECK_THROWS_AS(pqrs::pqNumber(-1), pqrs::PreconditionViolated);

  // (p - q) [n] = p^n - q^n
  for (int n = 0; n <= 12; ++n) {
    const Scalar lhs = (Scalar::p() - Scalar::q()) * pqrs::pqNumber(n);
    CHECK(lhs == Scalar::pPow(n) - Scalar::qPow(n));
  }
}

TEST_CASE("laurent extension agrees on integers and inverts cleanly") {
  for (long long m = 0; m <= 8; ++m) {
    CHECK(pqrs::pqNumberLaurent(m) == pqrs::pqNumber(static_cast<int>(m)));
    CHECK(pqrs::qNumberLaurent(m) == pqrs::pqNumber(static_cast<int>(m)).atPOne());
  }
  CHECK(pqrs::qNumberLaurent(-1) == -Scalar::qPow(-1));
  CHECK(pqrs::pqNumberLaurent(-1) == -(Scalar::pPow(-1) * Scalar::qPow(-1)));
  // [m+1] = p^m + q [m] over the full Laurent range
  for (long long m = -6; m <= 6; ++m) {
    const Scalar pm = Scalar::halfTerm(1, static_cast<int>(2 * m), 0);
    CHECK(pqrs::pqNumberLaurent(m + 1) == pm + Scalar::q() * pqrs::pqNumberLaurent(m));
  }
}

TEST_CASE("factorials and binomials") {
  CHECK(pqrs::pqFactorial(0).isOne());
  CHECK(pqrs::pqFactorial(4) ==
        pqrs::pqNumber(2) * pqrs::pqNumber(3) * pqrs::pqNumber(4));

  CHECK(pqrs::pqBinomial(4, 2).str() == "p^4 + p^3 q + 2 p^2 q^2 + p q^3 + q^4");
  CHECK(pqrs::pqBinomial(3, -1).isZero());
  CHECK(pqrs::pqBinomial(3, 4).isZero());
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(pqrs::pqBinomial(n, k) == pqrs::pqBinomial(n, n - k));
      CHECK(pqrs::pqBinomial(n, k) == pqrs::pqBinomialPascal(n, k));
      CHECK(pqrs::pqBinomial(n, k).isIntegral());
    }
  }
  // ordinary binomials at p = q = 1
  Rational rowSum(0);
  for (int k = 0; k <= 6; ++k) rowSum += pqrs::pqBinomial(6, k).substitute(1, 1);
  CHECK(rowSum == Rational(64));
}

TEST_CASE("binomial coefficients count partitions in a box") {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int box = k * (n - k);
      const pqrs::UniPoly g = pqrs::qBinomialUni(n, k);
      const Scalar h = pqrs::pqBinomial(n, k);
      Scalar expected = Scalar::zero();
      for (int j = 0; j <= box; ++j) {
        const Rational count(pqrs::BigInt(boxPartitions(j, n - k, k)), 1);
        CHECK(g.coeff(j) == count);
        // homogenization: the q^j cell sits at p^(box-j)
        expected = expected + Scalar::halfTerm(count, 2 * (box - j), 2 * j);
      }
      CHECK(h == expected);
      CHECK(g.substitute(Scalar::q()) == h.atPOne());
    }
  }
}

TEST_CASE("shifted factorials expand as products") {
  const Rational a(3, 2), b(-2);
  CHECK(pqrs::pqShiftedFactorial(a, b, 0).isOne());
  CHECK(pqrs::pqShiftedFactorial(a, b, 1) == Scalar(a) - Scalar(b));
  const Scalar expected = (Scalar(a) - Scalar(b)) *
                          (Scalar(a) * Scalar::p() - Scalar(b) * Scalar::q());
  CHECK(pqrs::pqShiftedFactorial(a, b, 2) == expected);

  // (x; t)_2 = (1 - x)(1 - x t)
  const Rational x(1, 3);
  const pqrs::UniPoly f = pqrs::qShiftedFactorialUni(x, 2);
  CHECK(f.coeff(0) == Rational(1) - x);
  CHECK(f.coeff(1) == -x + x * x);
  CHECK(f.coeff(2) == Rational(0));
  CHECK(pqrs::qShiftedFactorialUni(x, 0) == pqrs::UniPoly::one());
}

TEST_CASE("reduction checks return zero residuals") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 30; ++i) {
    const Rational a = gen::nonzeroRational(rng), b = gen::rational(rng);
    const int n = static_cast<int>(gen::pick(rng, 0, 8));
    const auto rep = pqrs::checkShiftedFactorialReduction(a, b, n);
    CHECK(rep.name == "shifted-factorial-reduction");
    CHECK(rep.pass);
    CHECK(rep.residual.isZero());
  }
  CHECK_THROWS_AS(pqrs::checkShiftedFactorialReduction(Rational(0), Rational(1), 3),
                  pqrs::PreconditionViolated);

  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto rep = pqrs::checkBinomialPPowerIdentity(n, k);
      CHECK(rep.pass);
      CHECK(rep.indices == std::vector<long long>{n, k});
    }
  }
  CHECK_THROWS_AS(pqrs::checkBinomialPPowerIdentity(3, 4), pqrs::PreconditionViolated);

  const auto rep = pqrs::checkBinomialPPowerIdentity(5, 2);
  const auto j = pqrs::toJson(rep);
  CHECK(j.at("name") == "binomial-p-power-reduction");
  CHECK(j.at("pass") == true);
}
