#ifndef PQRS_RATIONAL_HPP
#define PQRS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "pqrs/errors.hpp"

namespace pqrs {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, the ground field of everything here.
/// Always canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "a" or "a/b" with decimal digits and an optional leading sign
  /// on the numerator. Anything else is a ParseError.
  static Rational parse(std::string_view s);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool isZero() const { return v_.is_zero(); }
  bool isOne() const { return v_ == 1; }
  bool isNegative() const { return v_ < 0; }
  bool isInteger() const { return denominator() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return isNegative() ? -*this : *this; }

  /// Integer power; negative exponents invert. 0^e with e < 0 throws.
  Rational pow(long long e) const;

  /// Exact square root when this is a perfect square of a rational.
  std::optional<Rational> sqrtExact() const;

  double toDouble() const { return v_.template convert_to<double>(); }

  /// "a" when integral, "a/b" otherwise.
  std::string str() const;
  std::string numStr() const { return numerator().str(); }
  std::string denStr() const { return denominator().str(); }

 private:
  boost::multiprecision::cpp_rational v_;
};

}  // namespace pqrs

#endif
