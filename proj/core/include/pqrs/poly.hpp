#ifndef PQRS_POLY_HPP
#define PQRS_POLY_HPP

#include <utility>

#include "pqrs/report.hpp"
#include "pqrs/xpoly.hpp"

namespace pqrs {

/// H_n(x;p,q) = sum_k [n k]_{p,q} x^k. Monic of degree n, constant term 1.
XPoly pqRsPoly(int n);

/// H_n(x;q): the p = 1 specialization of pqRsPoly.
XPoly rsPoly(int n);

/// Classical h_n(x) = (1+x)^n: the p = q = 1 specialization.
XPoly classicalHPoly(int n);

/// H_n(x;q^(-1),q) = sum_k [n k]_{q^2} q^(-k(n-k)) x^k, built directly from
/// the Gaussian binomial at t = q^2.
XPoly specialRsQinvQ(int n);

/// G_n(x;p,q) = sum_k [n k]_{p,q} (pq)^(-k(n-k)) x^k
///            = H_n(x;p^(-1),q^(-1)).
XPoly swPoly(int n);

/// The pair (H_n, [n]!): the normalized state is H_n / sqrt([n]!), kept in
/// this exact form so no square roots ever enter the arithmetic.
struct NormalizedState {
  int n = 0;
  XPoly hpoly;
  Scalar normSquared;
};

NormalizedState psiState(int n);

/// Exact value of f at x = x0, (p, q) = (p0, q0) by Horner evaluation.
Rational evalExact(const XPoly& f, const Rational& x0, const Rational& p0,
                   const Rational& q0);

struct HermiteResult {
  double value = 0.0;
  double imagResidue = 0.0;
};

/// Continuous Hermite-type evaluation e^(-in theta) H_n(e^(2i theta);p0,q0),
/// computed as sum_k [n k]_{p0,q0} e^(i(2k-n) theta) in complex floating
/// point. The k <-> n-k symmetry of the binomial makes the sum real; the
/// imaginary part is returned as a diagnostic and must stay within 1e-10.
/// Throws ImaginaryResidueTooLarge beyond that bound.
HermiteResult hermiteEval(int n, double theta, const Rational& p0, const Rational& q0);

/// Obstruction check: no constant c, scale lambda and single parameter q'
/// can turn the one-parameter family into H_n(x;p0,q0) for n = 2 and n = 3
/// simultaneously. Matching n = 2 forces c = 1, lambda = +-1,
/// q' = +-(p0+q0) - 1; the report passes when both candidates mismatch the
/// degree-3 row, i.e. lambda [3]_{q'} != [3]_{p0,q0}. Requires
/// (p0-1)(q0-1) != 0: at p0 = 1 or q0 = 1 the rescaling exists trivially
/// and PreconditionViolated is thrown. A pass carries a zero residual; in
/// the (unreachable under the precondition) failing case the residual is
/// the unit polynomial as a sentinel witness.
LinOpReport checkNoRescaling(const Rational& p0, const Rational& q0);

/// The two candidate mismatches lambda [3]_{q'} - [3]_{p0,q0} for
/// lambda = +1 and lambda = -1, exposed for diagnostics. The first equals
/// (p0-1)(q0-1) identically.
std::pair<Rational, Rational> noRescalingMismatches(const Rational& p0, const Rational& q0);

/// swPoly(n) vs pqRsPoly(n) with every coefficient exponent negated.
LinOpReport checkSwMatchesInvertedRs(int n);

/// specialRsQinvQ(n) vs the p -> q^(-1) substitution of pqRsPoly(n).
LinOpReport checkSpecialRsQinv(int n);

/// x^n H_n(1/x) = H_n(x), the reversal symmetry of the coefficient row.
LinOpReport checkSelfReciprocal(int n);

}  // namespace pqrs

#endif
