#ifndef PQRS_OPS_HPP
#define PQRS_OPS_HPP

#include <vector>

#include "pqrs/report.hpp"
#include "pqrs/xpoly.hpp"

namespace pqrs {

/// Two-parameter difference operator, acting coefficient-wise:
/// c x^k -> c [k]_{p,q} x^(k-1). On polynomials this closed form equals
/// the quotient (f(px) - f(qx)) / ((p-q)x) and is total at x = 0.
XPoly dPq(const XPoly& f);

/// One-parameter difference operator: c x^k -> c [k]_q x^(k-1).
XPoly dQ(const XPoly& f);

/// Scaling operator: (eta_s f)(x) = f(sx), i.e. c x^k -> c s^k x^k.
/// s must be a nonzero Monomial.
XPoly eta(const XPoly& f, const Monomial& s);

/// Degree-indexed raising operator
///   eta_p + p^n x eta_{p^(-1)} - (p-q) x dPq
/// which maps H_n to H_(n+1) exactly. The p^n factor is supplied per
/// application because a coordinate operator cannot read the degree off an
/// arbitrary polynomial.
XPoly raisePq(int n, const XPoly& f);

/// p = 1 slice of raisePq; the degree index drops out:
/// f -> (1 + x) f - (1-q) x dQ(f). Maps H_n(x;q) to H_(n+1)(x;q).
XPoly raiseQ(const XPoly& f);

/// H_(n+1) = eta_p H_n + p^n x eta_{p^(-1)} H_n - (p-q) x [n] H_(n-1),
/// the three-term recurrence behind the raising operator. n >= 1.
LinOpReport checkRecurrencePqro(int n);

/// q-binomial recurrence at p = 1:
/// [n+1,k]_q = [n,k]_q + [n,k-1]_q - (1-q^n) [n-1,k-1]_q, 0 <= k <= n+1.
LinOpReport checkQid(int n, int k);

/// The six ladder identities on H_n with A_- = dPq and A_+ = raisePq:
///   A_- H_n = [n] H_(n-1)            (ladder-lowering)
///   A_+ H_n = H_(n+1)                (ladder-raising)
///   A_+ A_- H_n = [n] H_n            (ladder-number-product)
///   A_- A_+ H_n = [n+1] H_n          (ladder-shifted-number-product)
///   (A_- A_+ - q A_+ A_-) H_n = p^n H_n   (ladder-q-commutation)
///   (A_- A_+ - p A_+ A_-) H_n = q^n H_n   (ladder-p-commutation)
std::vector<LinOpReport> checkLadderSuite(int n);

/// Annihilator check:
/// [(p-q) x dPq^2 - (eta_p + p^(n-1) x eta_{p^(-1)}) dPq + [n]] H_n = 0.
LinOpReport checkDiffeq(int n);

/// p = 1 slice of the ladder suite on H_n(x;q) with A_- = dQ,
/// A_+ = raiseQ; the two weighted commutations collapse into the single
/// relation (A_- A_+ - q A_+ A_-) H_n = H_n.
std::vector<LinOpReport> checkQLadderSuite(int n);

/// H_(n+1)(x;q) = (1+x) H_n(x;q) - (1-q^n) x H_(n-1)(x;q). n >= 1.
LinOpReport checkQRecurrence(int n);

/// [(1-q) x dQ^2 - (1+x) dQ + [n]_q] H_n(x;q) = 0.
LinOpReport checkQDiffeq(int n);

/// dPq^(n+1) H_n = 0 while dPq^n H_n = [n]! (a nonzero constant); returned
/// as the pair of reports d-nilpotent-order and d-full-lowering.
std::vector<LinOpReport> checkNilpotency(int n);

}  // namespace pqrs

#endif
