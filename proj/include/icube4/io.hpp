#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "icube4/counting.hpp"
#include "icube4/icube.hpp"

namespace icube4 {

using Json = nlohmann::ordered_json;

// Text form "a+bi+cj+dk" with exact rational coefficients of denominator 1
// or 2 (halves rendered as d/2). Zero terms and unit magnitudes are omitted
// when printing; the parser accepts both spellings. Round-trips bit-exactly.
std::string to_text(const Quat& q);
Quat quat_from_text(std::string_view s);  // throws parse_error, not_hurwitz

// JSON forms. Quaternions carry their doubled coefficients; composite
// formats are versioned with "v": 1.
Json to_json(const Quat& q);
Quat quat_from_json(const Json& j);

Json to_json(const ICube& c);
ICube icube_from_json(const Json& j);

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const CountReport& r);

}  // namespace icube4
