#pragma once

// The five scale systems over one octave (C..C2) and the reference table of
// tonal-music intervals.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace consonoscope {

inline constexpr std::size_t kScalePitches = 13;
inline constexpr double kDefaultBaseFrequency = 261.6256;  // equal-tempered C4 from A440

enum class Temperament { EqualTemperament, Pythagorean, JustMajor, MeanTone, Werckmeister };

inline constexpr std::array<Temperament, 5> kAllTemperaments = {
    Temperament::EqualTemperament, Temperament::Pythagorean, Temperament::JustMajor,
    Temperament::MeanTone, Temperament::Werckmeister};

// Machine names: equal, pythagorean, just_major, mean_tone, werckmeister.
std::string_view to_string(Temperament kind);
Temperament temperament_from_string(std::string_view text);

// C, C#, D, D#, E, F, F#, G, G#, A, A#, B, C2
const std::array<std::string, kScalePitches>& pitch_names();

struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// Frequency ratios to C for each pitch of the given system.
//   Pythagorean  1, 256/243, 9/8, 32/27, 81/64, 4/3, 729/512, 3/2, 128/81, 27/16, 16/9, 243/128, 2
//   Just major   1, 16/15, 9/8, 6/5, 5/4, 4/3, 45/32, 3/2, 8/5, 5/3, 9/5, 15/8, 2
//   Mean-tone    quarter-comma: fifth = 5^(1/4), chain Eb..G# folded into the octave
//                (wolf between G# and Eb)
//   Werckmeister III: C-G, G-D, D-A and B-F# narrowed by a quarter Pythagorean comma
const std::array<double, kScalePitches>& ratio_table(Temperament kind);

// Exact rational ratios for the systems that have them (Pythagorean, JustMajor).
std::optional<std::array<Ratio, kScalePitches>> rational_ratios(Temperament kind);

struct Scale {
  Temperament kind = Temperament::EqualTemperament;
  double base_frequency = kDefaultBaseFrequency;
  std::array<double, kScalePitches> frequencies{};

  const std::array<std::string, kScalePitches>& names() const { return pitch_names(); }
};

Scale build_scale(Temperament kind, double base_frequency = kDefaultBaseFrequency);

// frequencies[index]·2^octave_shift; index must be in [0, 12].
double pitch_frequency(const Scale& scale, int index, int octave_shift = 0);

enum class ConsonanceClass { AbsoluteCons, PerfectCons, MediumCons, ImperfectCons, Dissonant };

std::string_view to_string(ConsonanceClass cls);

struct ReferenceInterval {
  std::string name;
  Ratio just_ratio;  // ascending form, lowest terms
  ConsonanceClass consonance_class;
};

// The thirteen intervals of tonal music with just ratios and traditional
// consonance classes. Cents are not stored; use cents(1, ratio.value()).
const std::vector<ReferenceInterval>& reference_intervals();

}  // namespace consonoscope
