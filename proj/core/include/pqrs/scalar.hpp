#ifndef PQRS_SCALAR_HPP
#define PQRS_SCALAR_HPP

#include <map>
#include <string>
#include <utility>

#include "pqrs/rational.hpp"

namespace pqrs {

/// Exponent pair in HALF-units: a key (i, j) stands for p^(i/2) q^(j/2).
/// Half powers exist so that objects like q^(-N/2) live in the same ring.
struct ExpKey {
  int p2 = 0;
  int q2 = 0;
  friend auto operator<=>(const ExpKey&, const ExpKey&) = default;
};

/// A single term c * p^(p2/2) * q^(q2/2). Zero coefficient represents the
/// zero monomial (only meaningful as an eta/diagonal base sentinel).
class Monomial {
 public:
  Monomial() = default;
  Monomial(Rational coeff, int p2, int q2) : c_(std::move(coeff)), e_{p2, q2} {}

  static Monomial one() { return {1, 0, 0}; }
  static Monomial p() { return {1, 2, 0}; }
  static Monomial q() { return {1, 0, 2}; }
  static Monomial pInverse() { return {1, -2, 0}; }
  static Monomial qInverse() { return {1, 0, -2}; }
  static Monomial pPow(int e) { return {1, 2 * e, 0}; }
  static Monomial qPow(int e) { return {1, 0, 2 * e}; }
  static Monomial pqPow(int e) { return {1, 2 * e, 2 * e}; }

  const Rational& coeff() const { return c_; }
  int p2() const { return e_.p2; }
  int q2() const { return e_.q2; }
  bool isZero() const { return c_.isZero(); }

  /// Integer power; negative k requires a nonzero coefficient.
  Monomial pow(int k) const { return {c_.pow(k), e_.p2 * k, e_.q2 * k}; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.c_ * b.c_, a.e_.p2 + b.e_.p2, a.e_.q2 + b.e_.q2};
  }

 private:
  Rational c_ = 0;
  ExpKey e_;
};

/// Sparse Laurent polynomial in p^(1/2) and q^(1/2) over Rational.
/// Canonical form: no zero coefficients, unique exponent keys, terms kept
/// lex-sorted by (p2, q2). Equality is structural on this form, so every
/// identity check reduces to normalizing a difference to zero.
class Scalar {
 public:
  using TermMap = std::map<ExpKey, Rational>;

  Scalar() = default;  // zero
  Scalar(long long n) : Scalar(Rational(n)) {}  // NOLINT: implicit by design
  Scalar(const Rational& r);                    // NOLINT: implicit by design
  Scalar(const Monomial& m);                    // NOLINT: implicit by design

  static Scalar zero() { return {}; }
  static Scalar one() { return Scalar(1); }
  static Scalar p() { return Scalar(Monomial::p()); }
  static Scalar q() { return Scalar(Monomial::q()); }
  static Scalar pPow(int e) { return Scalar(Monomial::pPow(e)); }
  static Scalar qPow(int e) { return Scalar(Monomial::qPow(e)); }
  /// Term from half-unit exponents.
  static Scalar halfTerm(const Rational& c, int p2, int q2) {
    return Scalar(Monomial(c, p2, q2));
  }

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  /// True when every exponent is an integer power of p and q.
  bool isIntegral() const;
  std::size_t numTerms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  Scalar pow(int e) const;  // e >= 0

  /// Exact quotient in the Laurent ring. Division by a single-term Scalar
  /// always succeeds; otherwise throws NotDivisible when no exact quotient
  /// exists. Never truncates.
  Scalar divExact(const Scalar& b) const;

  /// Exact value at (p, q) = (p0, q0). Half powers require perfect-square
  /// bases; negative powers require nonzero bases.
  Rational substitute(const Rational& p0, const Rational& q0) const;

  Scalar swapPQ() const;            // p <-> q
  Scalar negatedExponents() const;  // p -> 1/p, q -> 1/q
  Scalar atPOne() const;            // p -> 1
  Scalar atQOne() const;            // q -> 1
  Scalar pToQInverse() const;       // p -> 1/q

  /// Total degree in whole units of the term with the given key; helper
  /// for homogeneity checks.
  static Rational totalDegree(const ExpKey& k) { return Rational(k.p2 + k.q2, 2); }

  /// Canonical text form, highest p-power first: "p^2 + p q + q^2",
  /// "2 p^2 q^2", "q^-1/2", "-1/3 p + q", "0".
  std::string str() const;

 private:
  void addTerm(const ExpKey& k, const Rational& c);
  Scalar mappedExponents(int pp, int pq, int qp, int qq) const;

  TermMap terms_;
};

}  // namespace pqrs

#endif
