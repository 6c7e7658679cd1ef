#ifndef PQRS_PQCORE_HPP
#define PQRS_PQCORE_HPP

#include "pqrs/report.hpp"
#include "pqrs/scalar.hpp"
#include "pqrs/unipoly.hpp"

namespace pqrs {

/// [n]_{p,q} = (p^n - q^n)/(p - q) expanded as sum_{k=0}^{n-1} p^(n-1-k) q^k.
/// Homogeneous of degree n-1; [0] = 0, [1] = 1.
Scalar pqNumber(int n);

/// [m]_{p,q} for any integer m, as a Laurent Scalar:
/// [-m] = -(pq)^(-m) [m].
Scalar pqNumberLaurent(long long m);

/// (1 - q^m)/(1 - q) for any integer m; negative m yields Laurent terms,
/// e.g. [-1] = -q^(-1).
Scalar qNumberLaurent(long long m);

/// [n]_{p,q}! = [n][n-1]...[1]; [0]! = 1.
Scalar pqFactorial(int n);

/// [n k]_{p,q} via the factorial quotient [n]!/([k]![n-k]!), divided
/// exactly. Zero when k < 0 or k > n. Homogeneous of degree k(n-k) with
/// nonnegative integer coefficients.
Scalar pqBinomial(int n, int k);

/// Same value as pqBinomial, built bottom-up from the three-term recurrence
/// [n+1,k] = p^k [n,k] + p^(n-k+1) [n,k-1] - (p^n - q^n) [n-1,k-1].
Scalar pqBinomialPascal(int n, int k);

/// Gaussian binomial coefficient as a polynomial in t.
UniPoly qBinomialUni(int n, int k);

/// (a,b;p,q)_n = prod_{k=0}^{n-1} (a p^k - b q^k); empty product is 1.
Scalar pqShiftedFactorial(const Rational& a, const Rational& b, int n);

/// One-base shifted factorial prod_{k=0}^{n-1} (1 - x t^k) as a UniPoly.
UniPoly qShiftedFactorialUni(const Rational& x, int n);

/// Verifies (a,b;p,q)_n = a^n p^(n(n-1)/2) (b/a; q/p)_n, the right side
/// assembled from qShiftedFactorialUni at t = q/p. Requires a != 0.
LinOpReport checkShiftedFactorialReduction(const Rational& a, const Rational& b, int n);

/// Verifies [n k]_{p,q} = p^(k(n-k)) [n k]_{q/p}, the right side assembled
/// from qBinomialUni at t = q/p. Requires 0 <= k <= n.
LinOpReport checkBinomialPPowerIdentity(int n, int k);

}  // namespace pqrs

#endif
