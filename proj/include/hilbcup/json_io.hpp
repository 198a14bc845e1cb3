#pragma once

// JSON encodings. All big numbers travel as decimal strings ("p/q" for
// rationals); containers are emitted in canonical key order so identical
// values always serialize to identical bytes.

#include <json.hpp>

#include "hilbcup/characters.hpp"
#include "hilbcup/class_function.hpp"
#include "hilbcup/hilbert.hpp"
#include "hilbcup/ppoly.hpp"

namespace hilbcup::json {

using nlohmann::json;

json to_json(const Partition& lambda);
Partition partition_from_json(const json& j);

// {"n": 4, "coeffs": [{"partition": [3,1], "value": "3"}, ...]}
json to_json(const ClassFunction& f);
json to_json(const RationalClassFunction& f);
ClassFunction class_function_from_json(const json& j);
RationalClassFunction rational_class_function_from_json(const json& j);

// [{"powers": [[index, exponent], ...], "coeff": "p/q"}, ...]
json to_json(const PPoly& q);
PPoly ppoly_from_json(const json& j);

// [{"exponents": [[i, e], ...], "coeff": "integer"}, ...]
json to_json(const ChernPoly& r);
ChernPoly chern_poly_from_json(const json& j);

json to_json(const CharacterTable& table);
json to_json(const Presentation& p);
json to_json(const GradedRankReport& report);

// Parses text; rethrows parser failures as Error(Parse).
json parse(std::string_view text);

}  // namespace hilbcup::json
