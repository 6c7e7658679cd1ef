#include "pqrs/rational.hpp"

#include <cctype>

namespace pqrs {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
  v_ = mp::cpp_rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parseSignedInt(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!allDigits(s)) throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parseSignedInt(s), 1);
  std::string_view den = s.substr(slash + 1);
  if (!allDigits(den)) throw ParseError("denominator must be a positive integer: '" + std::string(s) + "'");
  BigInt d((std::string(den)));
  if (d.is_zero()) throw ParseError("zero denominator: '" + std::string(s) + "'");
  return Rational(parseSignedInt(s.substr(0, slash)), d);
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (isZero()) {
    if (e < 0) throw ZeroBaseNegativeExponent("0 raised to a negative exponent");
    return Rational(0);
  }
  auto a = static_cast<unsigned>(e < 0 ? -e : e);
  BigInt np = mp::pow(numerator(), a);
  BigInt dp = mp::pow(denominator(), a);
  return e > 0 ? Rational(np, dp) : Rational(dp, np);
}

std::optional<Rational> Rational::sqrtExact() const {
  if (isNegative()) return std::nullopt;
  BigInt n = numerator(), d = denominator();
  BigInt sn = mp::sqrt(n), sd = mp::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

std::string Rational::str() const {
  if (isInteger()) return numStr();
  return numStr() + "/" + denStr();
}

}  // namespace pqrs
