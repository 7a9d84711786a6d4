#include "cli/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "consonoscope/errors.hpp"

namespace consonoscope::cli {

namespace {

void put_le(std::string& out, std::uint32_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out += static_cast<char>((value >> (8 * i)) & 0xff);
}

}  // namespace

std::string encode_wav(std::span<const double> samples, int sample_rate) {
  if (sample_rate <= 0) throw UsageError("wav sample rate must be positive");
  double peak = 0.0;
  for (double s : samples) peak = std::max(peak, std::abs(s));
  const double gain = peak > 0.0 ? 0.9 * 32767.0 / peak : 0.0;

  const auto data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
  std::string out = "RIFF";
  put_le(out, 36 + data_bytes, 4);
  out += "WAVEfmt ";
  put_le(out, 16, 4);
  put_le(out, 1, 2);  // PCM
  put_le(out, 1, 2);  // mono
  put_le(out, static_cast<std::uint32_t>(sample_rate), 4);
  put_le(out, static_cast<std::uint32_t>(sample_rate) * 2, 4);
  put_le(out, 2, 2);
  put_le(out, 16, 2);
  out += "data";
  put_le(out, data_bytes, 4);
  for (double s : samples) {
    const auto v = static_cast<std::int16_t>(std::lround(s * gain));
    put_le(out, static_cast<std::uint16_t>(v), 2);
  }
  return out;
}

}  // namespace consonoscope::cli
