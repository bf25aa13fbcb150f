#pragma once

#include "hyperchow/cycles.hpp"

#include <json.hpp>

/// Exact JSON forms (schema in data/schema/hyperchow.schema.json).
/// Rationals are strings "p" or "p/q"; polynomials are coefficient arrays,
/// lowest degree first; Jacobian classes are (u, v) pairs.
namespace hyperchow::io {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);
json to_json(const Polynomial& p);
json to_json(const HyperellipticCurve& c);
json to_json(const CurvePoint& p);
json to_json(const FunctionFieldElement& f);
json to_json(const Divisor& d);
json to_json(const MumfordPair& m);
json to_json(const PicPoint& p);
json to_json(const EmbeddedCurve& e);
json to_json(const ZeroCycleOnJ& z);
json to_json(const PreCycle& z);
json to_json(const ConfigurationReport& r);

/// Inverses; throw std::invalid_argument on malformed input. Rationals also
/// accept JSON integers.
Rational rational_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
HyperellipticCurve curve_from_json(const json& j);
CurvePoint point_from_json(const HyperellipticCurve& c, const json& j);
FunctionFieldElement function_from_json(const HyperellipticCurve& c, const json& j);
Divisor divisor_from_json(const HyperellipticCurve& c, const json& j);
MumfordPair mumford_from_json(const json& j);

}  // namespace hyperchow::io
