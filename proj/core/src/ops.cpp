#include "pqrs/ops.hpp"

#include "pqrs/errors.hpp"
#include "pqrs/pqcore.hpp"
#include "pqrs/poly.hpp"

namespace pqrs {

namespace {

XPoly lowerCoeffWise(const XPoly& f, const std::function<Scalar(int)>& weight) {
  if (f.isZero()) return {};
  std::vector<Scalar> out(f.degree());
  for (int k = 1; k <= f.degree(); ++k) out[k - 1] = f.coeff(k) * weight(k);
  return XPoly(std::move(out));
}

}  // namespace

XPoly dPq(const XPoly& f) {
  return lowerCoeffWise(f, [](int k) { return pqNumber(k); });
}

XPoly dQ(const XPoly& f) {
  return lowerCoeffWise(f, [](int k) { return pqNumber(k).atPOne(); });
}

XPoly eta(const XPoly& f, const Monomial& s) {
  if (s.isZero()) throw PreconditionViolated("eta requires s != 0");
  if (f.isZero()) return {};
  std::vector<Scalar> out(f.degree() + 1);
  for (int k = 0; k <= f.degree(); ++k) out[k] = f.coeff(k) * Scalar(s.pow(k));
  return XPoly(std::move(out));
}

XPoly raisePq(int n, const XPoly& f) {
  const XPoly scaledUp = eta(f, Monomial::p());
  const XPoly scaledDown = eta(f, Monomial::pInverse());
  return scaledUp + (Scalar(Monomial::pPow(n)) * scaledDown).mulXPow(1) -
         ((Scalar::p() - Scalar::q()) * dPq(f)).mulXPow(1);
}

XPoly raiseQ(const XPoly& f) {
  return f + f.mulXPow(1) - ((Scalar::one() - Scalar::q()) * dQ(f)).mulXPow(1);
}

LinOpReport checkRecurrencePqro(int n) {
  if (n < 1) throw PreconditionViolated("checkRecurrencePqro requires n >= 1");
  const XPoly hn = pqRsPoly(n);
  const XPoly rhs = eta(hn, Monomial::p()) +
                    (Scalar(Monomial::pPow(n)) * eta(hn, Monomial::pInverse())).mulXPow(1) -
                    ((Scalar::p() - Scalar::q()) * pqNumber(n) * pqRsPoly(n - 1)).mulXPow(1);
  return makeReport("raising-recurrence", {n}, pqRsPoly(n + 1) - rhs);
}

LinOpReport checkQid(int n, int k) {
  if (n < 1 || k < 0 || k > n + 1) {
    throw PreconditionViolated("checkQid requires n >= 1 and 0 <= k <= n+1");
  }
  const auto qBinom = [](int m, int j) { return pqBinomial(m, j).atPOne(); };
  const Scalar rhs = qBinom(n, k) + qBinom(n, k - 1) -
                     (Scalar::one() - Scalar::qPow(n)) * qBinom(n - 1, k - 1);
  return makeReport("q-binomial-recurrence", {n, k},
                    XPoly::constant(qBinom(n + 1, k) - rhs));
}

std::vector<LinOpReport> checkLadderSuite(int n) {
  if (n < 0) throw PreconditionViolated("checkLadderSuite requires n >= 0");
  const XPoly hn = pqRsPoly(n);
  const XPoly hnMinus = n >= 1 ? pqRsPoly(n - 1) : XPoly::zero();
  const Scalar num = pqNumber(n);

  const XPoly lowered = dPq(hn);
  const XPoly raised = raisePq(n, hn);
  // After A_- the state sits at degree n-1, so the inner raising uses n-1;
  // after A_+ it sits at degree n+1 and the lowering needs no index.
  const XPoly upDown = raisePq(n - 1, lowered);
  const XPoly downUp = dPq(raised);

  std::vector<LinOpReport> out;
  out.push_back(makeReport("ladder-lowering", {n}, lowered - num * hnMinus));
  out.push_back(makeReport("ladder-raising", {n}, raised - pqRsPoly(n + 1)));
  out.push_back(makeReport("ladder-number-product", {n}, upDown - num * hn));
  out.push_back(makeReport("ladder-shifted-number-product", {n},
                           downUp - pqNumber(n + 1) * hn));
  out.push_back(makeReport("ladder-q-commutation", {n},
                           downUp - Scalar::q() * upDown - Scalar::pPow(n) * hn));
  out.push_back(makeReport("ladder-p-commutation", {n},
                           downUp - Scalar::p() * upDown - Scalar::qPow(n) * hn));
  return out;
}

LinOpReport checkDiffeq(int n) {
  if (n < 0) throw PreconditionViolated("checkDiffeq requires n >= 0");
  const XPoly hn = pqRsPoly(n);
  const XPoly d1 = dPq(hn);
  const XPoly d2 = dPq(d1);
  const XPoly residual =
      ((Scalar::p() - Scalar::q()) * d2).mulXPow(1) -
      (eta(d1, Monomial::p()) +
       (Scalar(Monomial::pPow(n - 1)) * eta(d1, Monomial::pInverse())).mulXPow(1)) +
      pqNumber(n) * hn;
  return makeReport("pq-diffeq", {n}, residual);
}

std::vector<LinOpReport> checkQLadderSuite(int n) {
  if (n < 0) throw PreconditionViolated("checkQLadderSuite requires n >= 0");
  const XPoly hn = rsPoly(n);
  const XPoly hnMinus = n >= 1 ? rsPoly(n - 1) : XPoly::zero();
  const Scalar num = pqNumber(n).atPOne();

  const XPoly lowered = dQ(hn);
  const XPoly raised = raiseQ(hn);
  const XPoly upDown = raiseQ(lowered);
  const XPoly downUp = dQ(raised);

  std::vector<LinOpReport> out;
  out.push_back(makeReport("q-ladder-lowering", {n}, lowered - num * hnMinus));
  out.push_back(makeReport("q-ladder-raising", {n}, raised - rsPoly(n + 1)));
  out.push_back(makeReport("q-ladder-number-product", {n}, upDown - num * hn));
  out.push_back(makeReport("q-ladder-shifted-number-product", {n},
                           downUp - pqNumber(n + 1).atPOne() * hn));
  out.push_back(makeReport("q-ladder-unit-commutation", {n},
                           downUp - Scalar::q() * upDown - hn));
  return out;
}

LinOpReport checkQRecurrence(int n) {
  if (n < 1) throw PreconditionViolated("checkQRecurrence requires n >= 1");
  const XPoly hn = rsPoly(n);
  const XPoly rhs = hn + hn.mulXPow(1) -
                    ((Scalar::one() - Scalar::qPow(n)) * rsPoly(n - 1)).mulXPow(1);
  return makeReport("q-recurrence", {n}, rsPoly(n + 1) - rhs);
}

LinOpReport checkQDiffeq(int n) {
  if (n < 0) throw PreconditionViolated("checkQDiffeq requires n >= 0");
  const XPoly hn = rsPoly(n);
  const XPoly d1 = dQ(hn);
  const XPoly d2 = dQ(d1);
  const XPoly residual = ((Scalar::one() - Scalar::q()) * d2).mulXPow(1) -
                         (d1 + d1.mulXPow(1)) +
                         pqNumber(n).atPOne() * hn;
  return makeReport("q-diffeq", {n}, residual);
}

std::vector<LinOpReport> checkNilpotency(int n) {
  if (n < 0) throw PreconditionViolated("checkNilpotency requires n >= 0");
  XPoly f = pqRsPoly(n);
  for (int k = 0; k < n; ++k) f = dPq(f);
  std::vector<LinOpReport> out;
  out.push_back(makeReport("d-full-lowering", {n},
                           f - XPoly::constant(pqFactorial(n))));
  out.push_back(makeReport("d-nilpotent-order", {n}, dPq(f)));
  return out;
}

}  // namespace pqrs
