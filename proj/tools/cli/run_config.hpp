#pragma once

// Run configuration for the command-line tool: model overrides, base
// frequency, output directory and formats. Files use one `key = value` per
// line; `#` starts a comment.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "consonoscope/spectral.hpp"
#include "consonoscope/temperament.hpp"

namespace consonoscope::cli {

enum class OutputFormat { Csv, Json, Dot, Svg, Wav };

std::set<OutputFormat> parse_formats(std::string_view list);

struct RunConfig {
  ModelConfig model;
  double base_frequency = kDefaultBaseFrequency;
  std::optional<std::filesystem::path> out_dir;
  std::set<OutputFormat> formats = {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Dot,
                                    OutputFormat::Svg};

  bool wants(OutputFormat f) const { return formats.count(f) != 0; }
  void validate() const;
};

// Sets one key. Keys: partials, decay, fc, fd, hearing_min, hearing_max,
// cons_threshold, diss_threshold, mode, base_freq, out, format. Throws
// UsageError naming the key on an unknown key or unparseable value.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

// Defaults overlaid with the file's settings, validated.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view text);

// Explicit setting, else CONSONOSCOPE_OUT, else the working directory.
std::filesystem::path resolve_out_dir(const RunConfig& config);

}  // namespace consonoscope::cli
