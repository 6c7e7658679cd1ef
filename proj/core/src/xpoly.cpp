#include "pqrs/xpoly.hpp"

#include <algorithm>
#include <sstream>

#include "pqrs/errors.hpp"

namespace pqrs {

namespace {
const Scalar kZero{};
}

XPoly::XPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::constant(const Scalar& c) {
  XPoly r;
  if (!c.isZero()) r.coeffs_.push_back(c);
  return r;
}

XPoly XPoly::monomial(int k, const Scalar& c) {
  if (k < 0) throw PreconditionViolated("XPoly::monomial requires k >= 0");
  XPoly r;
  if (!c.isZero()) {
    r.coeffs_.assign(k + 1, Scalar());
    r.coeffs_.back() = c;
  }
  return r;
}

const Scalar& XPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

XPoly XPoly::operator-() const {
  XPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  XPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

XPoly operator*(const Scalar& c, const XPoly& f) {
  XPoly r;
  r.coeffs_.reserve(f.coeffs_.size());
  for (const auto& fc : f.coeffs_) r.coeffs_.push_back(c * fc);
  r.trim();
  return r;
}

XPoly XPoly::mulXPow(int k) const {
  if (k < 0) throw PreconditionViolated("XPoly::mulXPow requires k >= 0");
  if (isZero() || k == 0) return *this;
  XPoly r;
  r.coeffs_.assign(k, Scalar());
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

XPoly XPoly::reversed() const {
  XPoly r = *this;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.trim();
  return r;
}

XPoly XPoly::mapCoeffs(const std::function<Scalar(const Scalar&)>& fn) const {
  XPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(fn(c));
  r.trim();
  return r;
}

std::string XPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.isZero()) continue;
    if (!first) out << " + ";
    first = false;
    const std::string cs = c.str();
    const bool plain = c.numTerms() == 1 && cs.find(' ') == std::string::npos &&
                       cs.find('-') == std::string::npos;
    if (k == 0) {
      out << (plain ? cs : "(" + cs + ")");
      continue;
    }
    if (!c.isOne()) out << (plain ? cs : "(" + cs + ")") << ' ';
    out << 'x';
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

}  // namespace pqrs
