#include "consonoscope/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace consonoscope {

std::string fixed(double value, int decimals) {
  if (!std::isfinite(value)) throw std::domain_error("cannot format non-finite value");
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw std::overflow_error("value too large to format");
  std::string out(buf.data(), end);
  // "-0.000000" is noise from rounding tiny negatives.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

namespace {

void write(const nlohmann::json& node, std::string& out) {
  switch (node.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      // nlohmann::json objects are std::map backed, so iteration is sorted.
      for (const auto& [key, value] : node.items()) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(key).dump();
        out += ':';
        write(value, out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : node) {
        if (!first) out += ',';
        first = false;
        write(value, out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float:
      out += fixed(node.get<double>());
      break;
    default:
      out += node.dump();
  }
}

}  // namespace

std::string to_fixed_json(const nlohmann::json& doc) {
  std::string out;
  write(doc, out);
  return out;
}

}  // namespace consonoscope
