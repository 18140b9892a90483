#pragma once

#include <json.hpp>

#include "lforge/laurent.hpp"
#include "lforge/series.hpp"

namespace lforge {

struct SatakeGL2;
struct SatakeGL4;
struct SatakeGSp4;
struct SatakeData;

// {"vars": ["x","y"], "terms": [{"exp": [2,-1], "coef": "3/2"}, ...]}
// Terms are emitted in canonical order; rationals as strings, with plain
// integers also accepted on input.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

// {"deformation_vars": ["T"], "bounds": [8,0],
//  "coefficients": [{"deg": [k,0], "poly": {...}}, ...]}
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json satake_to_json(const SatakeData& s);
SatakeData satake_from_json(const nlohmann::json& j);

} // namespace lforge
