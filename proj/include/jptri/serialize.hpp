#pragma once

#include <json.hpp>

#include "jptri/hermite_pade.hpp"
#include "jptri/moments.hpp"
#include "jptri/poly.hpp"

namespace jptri {

/// {"basis":"bary"|"mono","degree":N,"terms":[{"l":..,"m":..,"coeff_num":"..",
/// "coeff_den":".."} | {"l":..,"m":..,"coeff":float}]}. Exact coefficients are
/// emitted as decimal strings so arbitrary precision survives the round trip.
nlohmann::json to_json(const BaryPoly& p);
nlohmann::json to_json(const MonoPoly& p);

BaryPoly bary_poly_from_json(const nlohmann::json& j);
MonoPoly mono_poly_from_json(const nlohmann::json& j);

/// Array of per-measure objects {"measure":j,"pairs":[{"l":..,"m":..,
/// "in_set":bool,"residual":"p/q"|float}],"pass":bool}.
nlohmann::json to_json(const OrthogonalityReport& report);
nlohmann::json to_json(const HpReport& report);

nlohmann::json scalar_to_json(const Scalar& s);

}  // namespace jptri
