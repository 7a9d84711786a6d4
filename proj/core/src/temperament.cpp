#include "consonoscope/temperament.hpp"

#include <cmath>

#include "consonoscope/errors.hpp"

namespace consonoscope {

namespace {

constexpr std::array<Ratio, kScalePitches> kPythagorean = {{
    {1, 1}, {256, 243}, {9, 8}, {32, 27}, {81, 64}, {4, 3}, {729, 512},
    {3, 2}, {128, 81}, {27, 16}, {16, 9}, {243, 128}, {2, 1}}};

constexpr std::array<Ratio, kScalePitches> kJustMajor = {{
    {1, 1}, {16, 15}, {9, 8}, {6, 5}, {5, 4}, {4, 3}, {45, 32},
    {3, 2}, {8, 5}, {5, 3}, {9, 5}, {15, 8}, {2, 1}}};

std::array<double, kScalePitches> to_doubles(const std::array<Ratio, kScalePitches>& ratios) {
  std::array<double, kScalePitches> out{};
  for (std::size_t i = 0; i < kScalePitches; ++i) out[i] = ratios[i].value();
  return out;
}

std::array<double, kScalePitches> equal_table() {
  std::array<double, kScalePitches> out{};
  for (std::size_t k = 0; k < kScalePitches; ++k) out[k] = std::exp2(static_cast<double>(k) / 12.0);
  out[12] = 2.0;
  return out;
}

// Quarter-comma mean-tone: k fifths above C for k = −3 (Eb) .. 8 (G#).
std::array<double, kScalePitches> mean_tone_table() {
  const double fifth = std::pow(5.0, 0.25);
  std::array<double, kScalePitches> out{};
  for (int k = -3; k <= 8; ++k) {
    double r = std::pow(fifth, k);
    while (r >= 2.0) r /= 2.0;
    while (r < 1.0) r *= 2.0;
    const int pitch = ((7 * k) % 12 + 12) % 12;
    out[static_cast<std::size_t>(pitch)] = r;
  }
  out[0] = 1.0;
  out[12] = 2.0;
  return out;
}

std::array<double, kScalePitches> werckmeister_table() {
  const double q = std::pow(2.0, 0.25);
  return {1.0,
          256.0 / 243.0,
          64.0 / 81.0 * std::sqrt(2.0),
          32.0 / 27.0,
          256.0 / 243.0 * q,
          4.0 / 3.0,
          1024.0 / 729.0,
          8.0 / 9.0 * std::pow(2.0, 0.75),
          128.0 / 81.0,
          1024.0 / 729.0 * q,
          16.0 / 9.0,
          128.0 / 81.0 * q,
          2.0};
}

}  // namespace

std::string_view to_string(Temperament kind) {
  switch (kind) {
    case Temperament::EqualTemperament: return "equal";
    case Temperament::Pythagorean: return "pythagorean";
    case Temperament::JustMajor: return "just_major";
    case Temperament::MeanTone: return "mean_tone";
    case Temperament::Werckmeister: return "werckmeister";
  }
  return "unknown";
}

Temperament temperament_from_string(std::string_view text) {
  for (auto kind : kAllTemperaments)
    if (to_string(kind) == text) return kind;
  throw UsageError("unknown temperament '" + std::string(text) +
                   "' (expected equal, pythagorean, just_major, mean_tone, werckmeister)");
}

const std::array<std::string, kScalePitches>& pitch_names() {
  static const std::array<std::string, kScalePitches> names = {
      "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B", "C2"};
  return names;
}

const std::array<double, kScalePitches>& ratio_table(Temperament kind) {
  static const auto equal = equal_table();
  static const auto pythagorean = to_doubles(kPythagorean);
  static const auto just = to_doubles(kJustMajor);
  static const auto mean = mean_tone_table();
  static const auto werck = werckmeister_table();
  switch (kind) {
    case Temperament::EqualTemperament: return equal;
    case Temperament::Pythagorean: return pythagorean;
    case Temperament::JustMajor: return just;
    case Temperament::MeanTone: return mean;
    case Temperament::Werckmeister: return werck;
  }
  throw UsageError("unknown temperament");
}

std::optional<std::array<Ratio, kScalePitches>> rational_ratios(Temperament kind) {
  if (kind == Temperament::Pythagorean) return kPythagorean;
  if (kind == Temperament::JustMajor) return kJustMajor;
  return std::nullopt;
}

Scale build_scale(Temperament kind, double base_frequency) {
  if (!(base_frequency > 0.0) || !std::isfinite(base_frequency))
    throw DomainError("base frequency must be positive");
  const auto& ratios = ratio_table(kind);
  Scale scale{kind, base_frequency, {}};
  for (std::size_t i = 0; i < kScalePitches; ++i) scale.frequencies[i] = base_frequency * ratios[i];
  return scale;
}

double pitch_frequency(const Scale& scale, int index, int octave_shift) {
  if (index < 0 || index >= static_cast<int>(kScalePitches))
    throw UsageError("pitch index must be in [0, 12], got " + std::to_string(index));
  return std::ldexp(scale.frequencies[static_cast<std::size_t>(index)], octave_shift);
}

std::string_view to_string(ConsonanceClass cls) {
  switch (cls) {
    case ConsonanceClass::AbsoluteCons: return "absolute";
    case ConsonanceClass::PerfectCons: return "perfect";
    case ConsonanceClass::MediumCons: return "medium";
    case ConsonanceClass::ImperfectCons: return "imperfect";
    case ConsonanceClass::Dissonant: return "dissonant";
  }
  return "unknown";
}

const std::vector<ReferenceInterval>& reference_intervals() {
  // Ratios written ascending (the traditional table lists string-length
  // fractions such as 2/3 for the fifth).
  static const std::vector<ReferenceInterval> table = {
      {"unison", {1, 1}, ConsonanceClass::AbsoluteCons},
      {"perfect octave", {2, 1}, ConsonanceClass::AbsoluteCons},
      {"fifth", {3, 2}, ConsonanceClass::PerfectCons},
      {"fourth", {4, 3}, ConsonanceClass::MediumCons},
      {"major sixth", {5, 3}, ConsonanceClass::MediumCons},
      {"major third", {5, 4}, ConsonanceClass::MediumCons},
      {"minor third", {6, 5}, ConsonanceClass::ImperfectCons},
      {"minor sixth", {8, 5}, ConsonanceClass::ImperfectCons},
      {"major second", {9, 8}, ConsonanceClass::Dissonant},
      {"major seventh", {15, 8}, ConsonanceClass::Dissonant},
      {"minor seventh", {16, 9}, ConsonanceClass::Dissonant},
      {"minor second", {16, 15}, ConsonanceClass::Dissonant},
      {"tritone", {45, 32}, ConsonanceClass::Dissonant},
  };
  return table;
}

}  // namespace consonoscope
