#ifndef PQRS_UNIPOLY_HPP
#define PQRS_UNIPOLY_HPP

#include <map>
#include <string>

#include "pqrs/scalar.hpp"

namespace pqrs {

/// Sparse univariate Laurent polynomial in a formal variable t over Rational.
/// Carries the Gaussian binomials and one-base shifted factorials whose base
/// is later substituted by a monomial such as q/p or q^2.
class UniPoly {
 public:
  using TermMap = std::map<int, Rational>;

  UniPoly() = default;  // zero
  UniPoly(long long c) : UniPoly(Rational(c)) {}  // NOLINT: implicit by design
  UniPoly(const Rational& c);                     // NOLINT: implicit by design

  static UniPoly one() { return UniPoly(1); }
  static UniPoly tPow(int e);
  static UniPoly term(const Rational& c, int e);

  bool isZero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(int e) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

  /// Evaluates at t = value. Negative t-exponents require a single-term
  /// value so the inverse stays in the ring.
  Scalar substitute(const Scalar& value) const;

  /// Ascending powers: "1 + t + 2 t^2 + t^3 + t^4".
  std::string str() const;

 private:
  void addTerm(int e, const Rational& c);

  TermMap terms_;
};

}  // namespace pqrs

#endif
