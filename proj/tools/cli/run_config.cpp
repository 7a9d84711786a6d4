#include "cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "consonoscope/errors.hpp"

namespace consonoscope::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out))
    throw UsageError(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw UsageError(std::string(key) + ": expected an integer, got '" + std::string(value) + "'");
  return out;
}

}  // namespace

std::set<OutputFormat> parse_formats(std::string_view list) {
  std::set<OutputFormat> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    if (item == "csv") out.insert(OutputFormat::Csv);
    else if (item == "json") out.insert(OutputFormat::Json);
    else if (item == "dot") out.insert(OutputFormat::Dot);
    else if (item == "svg") out.insert(OutputFormat::Svg);
    else if (item == "wav") out.insert(OutputFormat::Wav);
    else throw UsageError("format: unknown output format '" + std::string(item) + "'");
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UsageError("format: at least one output format is required");
  return out;
}

void RunConfig::validate() const {
  model.validate();
  if (!(base_frequency > 0.0)) throw UsageError("base_freq must be positive");
  if (formats.empty()) throw UsageError("format: at least one output format is required");
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  value = trim(value);
  auto& m = config.model;
  if (key == "partials") m.max_partials = parse_int(key, value);
  else if (key == "decay") m.decay_rate = parse_real(key, value);
  else if (key == "fc") m.f_c = parse_real(key, value);
  else if (key == "fd") m.f_d = parse_real(key, value);
  else if (key == "hearing_min") m.hearing_min = parse_real(key, value);
  else if (key == "hearing_max") m.hearing_max = parse_real(key, value);
  else if (key == "cons_threshold") m.consonance_threshold = parse_real(key, value);
  else if (key == "diss_threshold") m.dissonance_threshold = parse_real(key, value);
  else if (key == "mode") {
    try {
      m.weighting_mode = weighting_mode_from_string(value);
    } catch (const UsageError&) {
      throw UsageError("mode: expected 'literal' or 'proximity', got '" + std::string(value) + "'");
    }
  } else if (key == "base_freq") config.base_frequency = parse_real(key, value);
  else if (key == "out") {
    if (value.empty()) throw UsageError("out: directory must not be empty");
    config.out_dir = std::filesystem::path(std::string(value));
  } else if (key == "format") config.formats = parse_formats(value);
  else throw UsageError("unknown configuration key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::istringstream is{std::string(text)};
  int number = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++number;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("config line " + std::to_string(number) + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    if (!seen.emplace(key).second)
      throw UsageError("config key '" + std::string(key) + "' is set twice");
    apply_setting(config, key, line.substr(eq + 1));
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::filesystem::path resolve_out_dir(const RunConfig& config) {
  if (config.out_dir) return *config.out_dir;
  if (const char* env = std::getenv("CONSONOSCOPE_OUT"); env && *env) return env;
  return ".";
}

}  // namespace consonoscope::cli
