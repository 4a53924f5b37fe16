#pragma once

#include <string>

#include <json.hpp>

#include "hilbop/series.hpp"

namespace hilbop {

// Series <-> JSON:
//   { "vars": [{"name","max_pole","max_degree"}...],
//     "terms": [{"exp":[e1,...,ek], "coef":"p/q"}...] }
// Terms are emitted in lexicographic exponent order; coefficients are exact
// "numerator/denominator" strings.  Grading caps, when present, round-trip
// through an optional "caps" field.
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

// CSV with header "exponent_vector,value"; exponents |-separated.
std::string series_to_csv(const Series& s);

}  // namespace hilbop
