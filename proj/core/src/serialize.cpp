#include "pqrs/serialize.hpp"

#include "pqrs/errors.hpp"

namespace pqrs {

nlohmann::json toJson(const Scalar& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : s.terms()) {
    terms.push_back({{"p2", k.p2},
                     {"q2", k.q2},
                     {"num", c.numStr()},
                     {"den", c.denStr()}});
  }
  return {{"terms", std::move(terms)}};
}

Scalar scalarFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("Scalar JSON needs a terms array");
  }
  Scalar s;
  for (const auto& t : j["terms"]) {
    const Rational num = Rational::parse(t.at("num").get<std::string>());
    const Rational den = Rational::parse(t.at("den").get<std::string>());
    s += Scalar::halfTerm(num / den, t.at("p2").get<int>(), t.at("q2").get<int>());
  }
  return s;
}

nlohmann::json toJson(const XPoly& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(toJson(f.coeff(k)));
  return {{"n", f.degree()}, {"coeffs", std::move(coeffs)}};
}

XPoly xpolyFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw ParseError("XPoly JSON needs a coeffs array");
  }
  std::vector<Scalar> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const auto& c : j["coeffs"]) coeffs.push_back(scalarFromJson(c));
  return XPoly(std::move(coeffs));
}

nlohmann::json toJson(const LinOpReport& r) {
  return {{"name", r.name},
          {"indices", r.indices},
          {"pass", r.pass},
          {"residual", toJson(r.residual)}};
}

nlohmann::json toJson(const AlgebraReport& r) {
  return {{"relation", r.relation},
          {"interior", r.interior},
          {"pass", r.pass},
          {"worstResidual", toJson(r.worstResidual)}};
}

}  // namespace pqrs
