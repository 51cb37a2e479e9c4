#pragma once

#include <json.hpp>

#include "mf/formspace.hpp"
#include "mf/qexpansion.hpp"

namespace mf {

// {"grid": "int"|"half", "precision": P, "coeffs": {"m": "num/den", ...}}
// with twice-exponent keys as decimal strings.  Bit-exact round trip.
nlohmann::json qexpansion_to_json(const QExpansion& f);
QExpansion qexpansion_from_json(const nlohmann::json& j);

// {"group": ..., "weight": k, "character": "trivial"|"chi", "sturm": n,
//  "basis": [QExpansion...]}
nlohmann::json formspace_to_json(const FormSpace& s);
FormSpace formspace_from_json(const nlohmann::json& j);

}  // namespace mf
