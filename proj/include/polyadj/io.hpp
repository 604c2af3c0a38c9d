#pragma once

// JSON encodings: polytope.v1, cayley.v1, fan.v1 and the report documents.
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are "p/q" strings. Parsing failures throw Error(Parse).

#include <polyadj/adjunction.hpp>
#include <polyadj/cayley.hpp>
#include <polyadj/classify.hpp>
#include <polyadj/ehrhart.hpp>
#include <polyadj/polytope.hpp>
#include <polyadj/toricdict.hpp>

#include <json.hpp>

namespace polyadj::io {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
Json to_json(const Rational& q);  // always a string
Json to_json(const AffineUnimodularMap& map);
Json to_json(const Polytope& p);
Json to_json(const CayleySpec& spec);
Json to_json(const Fan& fan);
Json to_json(const FanDivisor& d);
Json to_json(const ClassificationVerdict& v);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Polytope polytope_from_json(const Json& j);
CayleySpec cayley_from_json(const Json& j);
Fan fan_from_json(const Json& j);
FanDivisor divisor_from_json(const Json& j);

/// Parses text; throws Error(Parse) on malformed JSON.
Json parse(std::string_view text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace polyadj::io
