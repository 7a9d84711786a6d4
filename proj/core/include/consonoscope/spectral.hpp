#pragma once

// Signal fundamentals: cents, phasor addition, beat-band classification,
// harmonic spectra with exponential decay, and time-domain rendering.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace consonoscope {

// How partial magnitudes enter the consonance/dissonance sums.
enum class WeightingMode {
  Literal,    // M(i)·M(j)·δf, as the scoring equations are written
  Proximity,  // M(i)·M(j) scaled from 1 at δf = 0 down to 0 at the band edge
};

std::string_view to_string(WeightingMode mode);
WeightingMode weighting_mode_from_string(std::string_view text);

struct ModelConfig {
  int max_partials = 50;
  double decay_rate = 0.08;  // per harmonic step
  double f_c = 10.0;         // Hz; gaps below this are consonant
  double f_d = 60.0;         // Hz; gaps in [f_c, f_d) are dissonant
  double hearing_min = 20.0;
  double hearing_max = 20000.0;
  double consonance_threshold = 5.0;
  double dissonance_threshold = 4.0;
  WeightingMode weighting_mode = WeightingMode::Proximity;

  // Throws UsageError naming the first offending field.
  void validate() const;
};

struct PhasorComponent {
  double amplitude = 0.0;
  double phase = 0.0;  // radians, (−π, π] once normalized
};

// Wraps an angle into (−π, π].
double normalize_phase(double radians);

// Interval size in cents: 1200·log2(f_high / f_low). Negative when f_high < f_low.
double cents(double f_low, double f_high);

// Adds same-frequency sinusoids as phasors. The result satisfies
// Σ aᵢ·cos(ωt + θᵢ) = a·cos(ωt + θ) for every t. A sum that cancels (|a|
// below 1e-12 of the summed input amplitudes) is reported as (0, 0).
PhasorComponent phasor_sum(std::span<const PhasorComponent> components);

enum class PerceptualClass { Tuned, SlowBeat, Rough, SeparateTones };

std::string_view to_string(PerceptualClass cls);

// Half-open bands: [0,2) Tuned, [2,10) SlowBeat, [10,60) Rough, [60,∞) SeparateTones.
PerceptualClass classify_gap(double delta_f);

struct Partial {
  double frequency = 0.0;  // Hz
  double magnitude = 0.0;  // linear
  int index = 1;           // harmonic number, or 1-based rank for inharmonic sets

  friend bool operator==(const Partial&, const Partial&) = default;
};

// An ordered, non-empty set of partials with strictly ascending frequencies.
class Spectrum {
 public:
  // Throws UsageError if partials is empty, unsorted, has duplicate or
  // nonpositive frequencies, or negative magnitudes.
  Spectrum(double fundamental, std::vector<Partial> partials);

  double fundamental() const { return fundamental_; }
  const std::vector<Partial>& partials() const { return partials_; }
  std::size_t size() const { return partials_.size(); }
  double highest_frequency() const { return partials_.back().frequency; }

  // Same frequencies with every magnitude multiplied by gain (gain ≥ 0).
  Spectrum scaled(double gain) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  double fundamental_;
  std::vector<Partial> partials_;
};

enum class HearingBand { Enforce, Ignore };

// Magnitude of harmonic i (1-based): exp(−decay_rate·(i−1)).
double harmonic_magnitude(int index, double decay_rate);

// Partials i·f0 for i = 1..max_partials. With HearingBand::Enforce, partials
// outside [hearing_min, hearing_max] are dropped without rescaling the rest;
// throws EmptySpectrumError if none survive.
Spectrum harmonic_spectrum(double f0, const ModelConfig& config,
                           HearingBand band = HearingBand::Enforce);

// One sounding voice: a spectrum plus per-partial phase offsets. An empty
// phase list means all zero.
struct Voice {
  Spectrum spectrum;
  std::vector<double> phases;
};

struct Waveform {
  double sample_rate = 0.0;
  std::vector<double> samples;
  // True when some partial sits at or above Nyquist.
  bool aliased = false;

  double time_of(std::size_t k) const { return static_cast<double>(k) / sample_rate; }
};

// sample k = dc_offset + Σ m·cos(2π·f·k/sample_rate + phase) over every
// partial of every voice. Produces round(duration·sample_rate) samples.
Waveform render_waveform(std::span<const Voice> voices, double duration,
                         double sample_rate, double dc_offset = 0.0);

// Indices k where |x[k]| is the maximum of |x| over [k − half_window,
// k + half_window] (first index wins ties). Only indices whose whole window
// lies inside the buffer are considered. Locates beat-envelope crests when
// half_window spans a few carrier cycles but stays under half the beat period.
std::vector<std::size_t> envelope_maxima(std::span<const double> samples,
                                         std::size_t half_window);

}  // namespace consonoscope
