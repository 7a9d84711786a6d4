#pragma once

#include <span>
#include <string>

namespace consonoscope::cli {

// Mono 16-bit PCM, peak-normalized to 0.9 of full scale.
std::string encode_wav(std::span<const double> samples, int sample_rate);

}  // namespace consonoscope::cli
