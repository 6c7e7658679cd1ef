#include "pqrs/unipoly.hpp"

#include <sstream>

#include "pqrs/errors.hpp"

namespace pqrs {

UniPoly::UniPoly(const Rational& c) {
  if (!c.isZero()) terms_.emplace(0, c);
}

UniPoly UniPoly::tPow(int e) { return term(1, e); }

UniPoly UniPoly::term(const Rational& c, int e) {
  UniPoly r;
  if (!c.isZero()) r.terms_.emplace(e, c);
  return r;
}

Rational UniPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UniPoly::addTerm(int e, const Rational& c) {
  if (c.isZero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

UniPoly UniPoly::operator-() const {
  UniPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.addTerm(ea + eb, ca * cb);
    }
  }
  return r;
}

Scalar UniPoly::substitute(const Scalar& value) const {
  if (terms_.empty()) return {};
  const int lowest = terms_.begin()->first;
  Scalar inv;
  if (lowest < 0) {
    if (value.numTerms() != 1) {
      throw PreconditionViolated(
          "negative t-exponent needs a single-term substitution value");
    }
    inv = Scalar::one().divExact(value);
  }
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    const Scalar base = e >= 0 ? value.pow(e) : inv.pow(-e);
    acc += Scalar(c) * base;
  }
  return acc;
}

std::string UniPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c.isNegative()) out << '-';
      first = false;
    } else {
      out << (c.isNegative() ? " - " : " + ");
    }
    const Rational mag = c.abs();
    if (e == 0) {
      out << mag.str();
      continue;
    }
    if (!mag.isOne()) out << mag.str() << ' ';
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace pqrs
