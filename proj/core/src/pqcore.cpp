#include "pqrs/pqcore.hpp"

#include <vector>

#include "pqrs/errors.hpp"

namespace pqrs {

Scalar pqNumber(int n) {
  if (n < 0) throw PreconditionViolated("pqNumber requires n >= 0");
  Scalar r;
  for (int k = 0; k < n; ++k) {
    r += Scalar::halfTerm(1, 2 * (n - 1 - k), 2 * k);
  }
  return r;
}

Scalar pqNumberLaurent(long long m) {
  if (m >= 0) return pqNumber(static_cast<int>(m));
  const Scalar pqInv = Scalar::halfTerm(1, 2 * static_cast<int>(m), 2 * static_cast<int>(m));
  return -(pqInv * pqNumber(static_cast<int>(-m)));
}

Scalar qNumberLaurent(long long m) {
  Scalar r;
  if (m >= 0) {
    for (long long k = 0; k < m; ++k) r += Scalar::qPow(static_cast<int>(k));
  } else {
    for (long long k = m; k < 0; ++k) r -= Scalar::qPow(static_cast<int>(k));
  }
  return r;
}

Scalar pqFactorial(int n) {
  if (n < 0) throw PreconditionViolated("pqFactorial requires n >= 0");
  Scalar r = Scalar::one();
  for (int k = 2; k <= n; ++k) r *= pqNumber(k);
  return r;
}

Scalar pqBinomial(int n, int k) {
  if (n < 0) throw PreconditionViolated("pqBinomial requires n >= 0");
  if (k < 0 || k > n) return {};
  return pqFactorial(n).divExact(pqFactorial(k) * pqFactorial(n - k));
}

Scalar pqBinomialPascal(int n, int k) {
  if (n < 0) throw PreconditionViolated("pqBinomialPascal requires n >= 0");
  if (k < 0 || k > n) return {};
  std::vector<Scalar> prev;                         // row n-1
  std::vector<Scalar> row{Scalar::one()};           // row 0
  if (n >= 1) {
    prev = row;
    row = {Scalar::one(), Scalar::one()};
  }
  const auto entry = [](const std::vector<Scalar>& r, int j) {
    if (j < 0 || j >= static_cast<int>(r.size())) return Scalar();
    return r[j];
  };
  for (int m = 1; m < n; ++m) {
    // next[j] = p^j row[j] + p^(m-j+1) row[j-1] - (p^m - q^m) prev[j-1]
    std::vector<Scalar> next(m + 2);
    const Scalar gap = Scalar::pPow(m) - Scalar::qPow(m);
    for (int j = 0; j <= m + 1; ++j) {
      next[j] = Scalar::pPow(j) * entry(row, j) +
                Scalar::pPow(m - j + 1) * entry(row, j - 1) -
                gap * entry(prev, j - 1);
    }
    prev = std::move(row);
    row = std::move(next);
  }
  return row[k];
}

UniPoly qBinomialUni(int n, int k) {
  if (n < 0) throw PreconditionViolated("qBinomialUni requires n >= 0");
  if (k < 0 || k > n) return {};
  // [m,j] = [m-1,j] + t^(m-j) [m-1,j-1]
  std::vector<UniPoly> row{UniPoly::one()};
  for (int m = 1; m <= n; ++m) {
    std::vector<UniPoly> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j < m) next[j] += row[j];
      if (j > 0) next[j] += UniPoly::tPow(m - j) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

Scalar pqShiftedFactorial(const Rational& a, const Rational& b, int n) {
  if (n < 0) throw PreconditionViolated("pqShiftedFactorial requires n >= 0");
  Scalar r = Scalar::one();
  for (int k = 0; k < n; ++k) {
    r *= Scalar::halfTerm(a, 2 * k, 0) - Scalar::halfTerm(b, 0, 2 * k);
  }
  return r;
}

UniPoly qShiftedFactorialUni(const Rational& x, int n) {
  if (n < 0) throw PreconditionViolated("qShiftedFactorialUni requires n >= 0");
  UniPoly r = UniPoly::one();
  for (int k = 0; k < n; ++k) {
    r *= UniPoly::one() - UniPoly::term(x, k);
  }
  return r;
}

LinOpReport checkShiftedFactorialReduction(const Rational& a, const Rational& b, int n) {
  if (a.isZero()) {
    throw PreconditionViolated("checkShiftedFactorialReduction requires a != 0");
  }
  const Scalar lhs = pqShiftedFactorial(a, b, n);
  const Scalar qOverP = Scalar::halfTerm(1, -2, 2);
  const Scalar rhs = Scalar(a.pow(n)) * Scalar::pPow(n * (n - 1) / 2) *
                     qShiftedFactorialUni(b / a, n).substitute(qOverP);
  return makeReport("shifted-factorial-reduction", {n},
                    XPoly::constant(lhs - rhs));
}

LinOpReport checkBinomialPPowerIdentity(int n, int k) {
  if (k < 0 || k > n) {
    throw PreconditionViolated("checkBinomialPPowerIdentity requires 0 <= k <= n");
  }
  const Scalar qOverP = Scalar::halfTerm(1, -2, 2);
  const Scalar rhs = Scalar::pPow(k * (n - k)) * qBinomialUni(n, k).substitute(qOverP);
  return makeReport("binomial-p-power-reduction", {n, k},
                    XPoly::constant(pqBinomial(n, k) - rhs));
}

}  // namespace pqrs
