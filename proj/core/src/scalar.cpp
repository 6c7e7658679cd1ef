#include "pqrs/scalar.hpp"

#include <sstream>

#include "pqrs/errors.hpp"

namespace pqrs {

namespace {

// Univariate exact-division workhorses used by divExact. Polynomials are
// sparse maps exponent -> coefficient; the nested layout views a Laurent-free
// polynomial in (P, Q) = (p^(1/2), q^(1/2)) as an element of (Q[Q])[P].
using QPoly = std::map<int, Rational>;
using NestedPoly = std::map<int, QPoly>;

void qpSubMul(QPoly& target, const QPoly& c, const QPoly& b) {
  for (const auto& [ce, cc] : c) {
    for (const auto& [be, bc] : b) {
      auto it = target.find(ce + be);
      if (it == target.end()) {
        target.emplace(ce + be, -(cc * bc));
      } else {
        it->second -= cc * bc;
        if (it->second.isZero()) target.erase(it);
      }
    }
  }
}

QPoly uniDivExact(QPoly rem, const QPoly& b) {
  const auto blead = std::prev(b.end());
  QPoly quot;
  while (!rem.empty()) {
    const auto rlead = std::prev(rem.end());
    const int shift = rlead->first - blead->first;
    if (shift < 0) throw NotDivisible("no exact quotient");
    const Rational c = rlead->second / blead->second;
    quot.emplace(shift, c);
    QPoly step{{shift, c}};
    qpSubMul(rem, step, b);
  }
  return quot;
}

NestedPoly nestedDivExact(NestedPoly rem, const NestedPoly& b) {
  const auto blead = std::prev(b.end());
  NestedPoly quot;
  while (!rem.empty()) {
    const auto rlead = std::prev(rem.end());
    const int shift = rlead->first - blead->first;
    if (shift < 0) throw NotDivisible("no exact quotient");
    const QPoly c = uniDivExact(rlead->second, blead->second);
    for (const auto& [be, bq] : b) {
      QPoly& target = rem[be + shift];
      qpSubMul(target, c, bq);
      if (target.empty()) rem.erase(be + shift);
    }
    quot.emplace(shift, c);
  }
  return quot;
}

void appendExponent(std::ostringstream& out, char var, int half) {
  if (half == 0) return;
  out << ' ' << var;
  if (half == 2) return;
  out << '^';
  if (half % 2 == 0) {
    out << half / 2;
  } else {
    out << half << "/2";
  }
}

}  // namespace

Scalar::Scalar(const Rational& r) {
  if (!r.isZero()) terms_.emplace(ExpKey{0, 0}, r);
}

Scalar::Scalar(const Monomial& m) {
  if (!m.isZero()) terms_.emplace(ExpKey{m.p2(), m.q2()}, m.coeff());
}

bool Scalar::isOne() const {
  if (terms_.size() != 1) return false;
  const auto& [k, c] = *terms_.begin();
  return k == ExpKey{0, 0} && c.isOne();
}

bool Scalar::isIntegral() const {
  for (const auto& [k, c] : terms_) {
    (void)c;
    if (k.p2 % 2 != 0 || k.q2 % 2 != 0) return false;
  }
  return true;
}

void Scalar::addTerm(const ExpKey& k, const Rational& c) {
  if (c.isZero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.addTerm(ExpKey{ka.p2 + kb.p2, ka.q2 + kb.q2}, ca * cb);
    }
  }
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) throw PreconditionViolated("Scalar::pow requires e >= 0");
  Scalar acc = one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::divExact(const Scalar& b) const {
  if (b.isZero()) throw DivisionByZero("Scalar division by zero");
  if (isZero()) return {};
  if (b.terms_.size() == 1) {
    const auto& [kb, cb] = *b.terms_.begin();
    Scalar r;
    for (const auto& [k, c] : terms_) {
      r.terms_.emplace(ExpKey{k.p2 - kb.p2, k.q2 - kb.q2}, c / cb);
    }
    return r;
  }

  // Factor out the lowest p- and q-exponents of each operand so both become
  // genuine polynomials in P = p^(1/2), Q = q^(1/2); the monomial prefactors
  // divide trivially in the Laurent ring, and polynomial divisibility is then
  // decided by exact long division in (Q[Q])[P].
  const auto minExps = [](const TermMap& t) {
    ExpKey m = t.begin()->first;
    for (const auto& [k, c] : t) {
      (void)c;
      m.p2 = std::min(m.p2, k.p2);
      m.q2 = std::min(m.q2, k.q2);
    }
    return m;
  };
  const ExpKey ma = minExps(terms_);
  const ExpKey mb = minExps(b.terms_);

  const auto toNested = [](const TermMap& t, const ExpKey& m) {
    NestedPoly n;
    for (const auto& [k, c] : t) n[k.p2 - m.p2][k.q2 - m.q2] = c;
    return n;
  };

  const NestedPoly quot = nestedDivExact(toNested(terms_, ma), toNested(b.terms_, mb));
  Scalar r;
  for (const auto& [pe, qp] : quot) {
    for (const auto& [qe, c] : qp) {
      r.terms_.emplace(ExpKey{pe + ma.p2 - mb.p2, qe + ma.q2 - mb.q2}, c);
    }
  }
  return r;
}

Rational Scalar::substitute(const Rational& p0, const Rational& q0) const {
  const auto powHalf = [](const Rational& base, int half) {
    if (half % 2 == 0) return base.pow(half / 2);
    const auto root = base.sqrtExact();
    if (!root) {
      throw HalfPowerOfNonSquare("half power of " + base.str() +
                                 " is not rational");
    }
    return root->pow(half);
  };
  Rational acc = 0;
  for (const auto& [k, c] : terms_) {
    acc += c * powHalf(p0, k.p2) * powHalf(q0, k.q2);
  }
  return acc;
}

Scalar Scalar::mappedExponents(int pp, int pq, int qp, int qq) const {
  Scalar r;
  for (const auto& [k, c] : terms_) {
    r.addTerm(ExpKey{pp * k.p2 + qp * k.q2, pq * k.p2 + qq * k.q2}, c);
  }
  return r;
}

Scalar Scalar::swapPQ() const { return mappedExponents(0, 1, 1, 0); }
Scalar Scalar::negatedExponents() const { return mappedExponents(-1, 0, 0, -1); }
Scalar Scalar::atPOne() const { return mappedExponents(0, 0, 0, 1); }
Scalar Scalar::atQOne() const { return mappedExponents(1, 0, 0, 0); }
Scalar Scalar::pToQInverse() const { return mappedExponents(0, -1, 0, 1); }

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (first) {
      if (c.isNegative()) out << '-';
      first = false;
    } else {
      out << (c.isNegative() ? " - " : " + ");
    }
    const Rational mag = c.abs();
    std::ostringstream vars;
    appendExponent(vars, 'p', k.p2);
    appendExponent(vars, 'q', k.q2);
    const std::string v = vars.str();
    if (v.empty()) {
      out << mag.str();
    } else {
      if (!mag.isOne()) out << mag.str() << v;
      else out << v.substr(1);
    }
  }
  return out.str();
}

}  // namespace pqrs
