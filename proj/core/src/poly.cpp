#include "pqrs/poly.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "pqrs/errors.hpp"
#include "pqrs/pqcore.hpp"

namespace pqrs {

XPoly pqRsPoly(int n) {
  if (n < 0) throw PreconditionViolated("pqRsPoly requires n >= 0");
  std::vector<Scalar> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) coeffs[k] = pqBinomial(n, k);
  return XPoly(std::move(coeffs));
}

XPoly rsPoly(int n) {
  return pqRsPoly(n).mapCoeffs([](const Scalar& c) { return c.atPOne(); });
}

XPoly classicalHPoly(int n) {
  return pqRsPoly(n).mapCoeffs(
      [](const Scalar& c) { return c.atPOne().atQOne(); });
}

XPoly specialRsQinvQ(int n) {
  if (n < 0) throw PreconditionViolated("specialRsQinvQ requires n >= 0");
  const Scalar qSquared = Scalar::qPow(2);
  std::vector<Scalar> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    coeffs[k] = qBinomialUni(n, k).substitute(qSquared) * Scalar::qPow(-k * (n - k));
  }
  return XPoly(std::move(coeffs));
}

XPoly swPoly(int n) {
  if (n < 0) throw PreconditionViolated("swPoly requires n >= 0");
  std::vector<Scalar> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    coeffs[k] = pqBinomial(n, k) *
                Scalar::halfTerm(1, -2 * k * (n - k), -2 * k * (n - k));
  }
  return XPoly(std::move(coeffs));
}

NormalizedState psiState(int n) {
  return NormalizedState{n, pqRsPoly(n), pqFactorial(n)};
}

Rational evalExact(const XPoly& f, const Rational& x0, const Rational& p0,
                   const Rational& q0) {
  Rational acc = 0;
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * x0 + f.coeff(k).substitute(p0, q0);
  }
  return acc;
}

HermiteResult hermiteEval(int n, double theta, const Rational& p0, const Rational& q0) {
  if (n < 0) throw PreconditionViolated("hermiteEval requires n >= 0");
  if (p0.isZero() || q0.isZero()) {
    throw PreconditionViolated("hermiteEval requires p0, q0 != 0");
  }
  const auto coeffAt = [&](int k) {
    return pqBinomial(n, k).substitute(p0, q0).toDouble();
  };
  // Terms are summed as mirror pairs k <-> n-k so the imaginary parts of a
  // symmetric coefficient row cancel exactly instead of accumulating
  // magnitude-proportional rounding noise; a broken symmetry still surfaces
  // at full coefficient scale.
  std::complex<double> acc = 0.0;
  for (int k = 0; 2 * k < n; ++k) {
    const auto phase = std::exp(std::complex<double>(0.0, (n - 2.0 * k) * theta));
    acc += coeffAt(n - k) * phase + coeffAt(k) * std::conj(phase);
  }
  if (n % 2 == 0) acc += coeffAt(n / 2);
  HermiteResult r{acc.real(), std::abs(acc.imag())};
  if (!std::isfinite(r.value) || !(r.imagResidue <= 1e-10)) {
    throw ImaginaryResidueTooLarge("imaginary residue " +
                                   std::to_string(r.imagResidue) + " at value " +
                                   std::to_string(r.value));
  }
  return r;
}

std::pair<Rational, Rational> noRescalingMismatches(const Rational& p0, const Rational& q0) {
  const Rational three = pqNumber(3).substitute(p0, q0);
  const auto row3 = [](const Rational& qp) { return Rational(1) + qp + qp * qp; };
  const Rational qPlus = p0 + q0 - 1;
  const Rational qMinus = -(p0 + q0) - 1;
  return {row3(qPlus) - three, -row3(qMinus) - three};
}

LinOpReport checkNoRescaling(const Rational& p0, const Rational& q0) {
  if ((p0 - 1).isZero() || (q0 - 1).isZero()) {
    throw PreconditionViolated(
        "rescaling exists at p0 = 1 or q0 = 1; obstruction check needs "
        "(p0-1)(q0-1) != 0");
  }
  const auto [plus, minus] = noRescalingMismatches(p0, q0);
  const bool obstructed = !plus.isZero() && !minus.isZero();
  LinOpReport r;
  r.name = "no-rescaling-obstruction";
  r.pass = obstructed;
  r.residual = obstructed ? XPoly::zero() : XPoly::one();
  return r;
}

LinOpReport checkSwMatchesInvertedRs(int n) {
  const XPoly inverted = pqRsPoly(n).mapCoeffs(
      [](const Scalar& c) { return c.negatedExponents(); });
  return makeReport("sw-inverted-rs", {n}, swPoly(n) - inverted);
}

LinOpReport checkSpecialRsQinv(int n) {
  const XPoly substituted = pqRsPoly(n).mapCoeffs(
      [](const Scalar& c) { return c.pToQInverse(); });
  return makeReport("special-rs-qinv", {n}, specialRsQinvQ(n) - substituted);
}

LinOpReport checkSelfReciprocal(int n) {
  const XPoly h = pqRsPoly(n);
  return makeReport("rs-self-reciprocal", {n}, h.reversed() - h);
}

}  // namespace pqrs
