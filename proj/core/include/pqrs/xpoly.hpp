#ifndef PQRS_XPOLY_HPP
#define PQRS_XPOLY_HPP

#include <functional>
#include <string>
#include <vector>

#include "pqrs/scalar.hpp"

namespace pqrs {

/// Dense polynomial in the indeterminate x with Scalar coefficients,
/// lowest power first. The leading stored coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class XPoly {
 public:
  XPoly() = default;  // zero
  explicit XPoly(std::vector<Scalar> coeffs);

  static XPoly zero() { return {}; }
  static XPoly one() { return constant(Scalar::one()); }
  static XPoly x() { return monomial(1, Scalar::one()); }
  static XPoly constant(const Scalar& c);
  static XPoly monomial(int k, const Scalar& c);  // c * x^k

  bool isZero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero Scalar beyond the degree.
  const Scalar& coeff(int k) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const Scalar& c, const XPoly& f);
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplication by x^k, k >= 0.
  XPoly mulXPow(int k) const;

  /// x^deg * f(1/x): the coefficient sequence reversed. Zero maps to zero.
  XPoly reversed() const;

  /// Coefficient-wise transform; trims the result.
  XPoly mapCoeffs(const std::function<Scalar(const Scalar&)>& fn) const;

  /// "1 + (p + q) x + x^2"; multi-term or negative coefficients are
  /// parenthesized, unit coefficients elided on nonconstant powers.
  std::string str() const;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

}  // namespace pqrs

#endif
