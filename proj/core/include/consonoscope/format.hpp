#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace consonoscope {

// Fixed-point rendering with a period separator regardless of the global
// locale. Negative zero prints as zero.
std::string fixed(double value, int decimals = 6);

// Serializes a JSON document compactly with object keys in sorted order and
// every floating-point number at six decimals. Integers and booleans are
// emitted verbatim.
std::string to_fixed_json(const nlohmann::json& doc);

}  // namespace consonoscope
