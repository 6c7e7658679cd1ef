#ifndef PQRS_SERIALIZE_HPP
#define PQRS_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "pqrs/report.hpp"
#include "pqrs/scalar.hpp"
#include "pqrs/xpoly.hpp"

namespace pqrs {

/// {"terms": [{"p2": int, "q2": int, "num": "dec", "den": "dec"}, ...]}
/// sorted ascending by (p2, q2); round-trips bit-exactly.
nlohmann::json toJson(const Scalar& s);
Scalar scalarFromJson(const nlohmann::json& j);

/// {"n": degree, "coeffs": [Scalar-JSON, ...]} lowest power first;
/// the zero polynomial is {"n": -1, "coeffs": []}.
nlohmann::json toJson(const XPoly& f);
XPoly xpolyFromJson(const nlohmann::json& j);

/// {"name": string, "indices": [ints], "pass": bool, "residual": XPoly-JSON}
nlohmann::json toJson(const LinOpReport& r);

/// {"relation": string, "interior": int, "pass": bool,
///  "worstResidual": Scalar-JSON}
nlohmann::json toJson(const AlgebraReport& r);

}  // namespace pqrs

#endif
