#pragma once

// Quadratic amplification y = (Σ aᵢ·cos(ωᵢt) + bias)²: exact spectral
// expansion, bias sweeps with consonance re-analysis, and a linearity measure.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "consonoscope/analysis.hpp"
#include "consonoscope/consonance.hpp"
#include "consonoscope/spectral.hpp"

namespace consonoscope {

// A zero-phase cosine input component.
struct Tone {
  std::string label;
  double frequency = 0.0;  // Hz, > 0
  double amplitude = 0.0;  // ≥ 0
};

// Root, major third and fifth of the just major scale on `base_frequency`
// with amplitudes 1, 1/3 and 1/5.
std::vector<Tone> just_major_triad_tones(double base_frequency);

struct AmplifierConfig {
  double bias = 0.0;
  std::vector<double> biases_sweep = {0.0, 1.0, 2.5, 4.0, 10.0, 50.0};
  double render_seconds = 1.0;  // window for the linearity measurement
  double sample_rate = 44100.0;

  // Biases must be nonnegative and ascending.
  void validate() const;
};

struct ExpandedSpectrum {
  double dc = 0.0;
  std::vector<Partial> partials;  // ascending, frequencies > 0, index = rank

  double amplitude_at(double frequency) const;  // 0 when absent
};

// Product-to-sum expansion of (Σ aᵢ·cos(ωᵢt) + bias)²:
//   dc          bias² + Σ aᵢ²/2
//   ωᵢ          2·bias·aᵢ
//   2ωᵢ         aᵢ²/2
//   ωᵢ ± ωⱼ     aᵢ·aⱼ each (i < j)
// Components whose frequencies agree to 1e-9 relative are merged by adding
// amplitudes; zero-amplitude components are dropped. Throws UsageError on
// duplicate or nonpositive input frequencies or negative amplitudes/bias.
ExpandedSpectrum square_expand(std::span<const Tone> input, double bias);

// Output partial set of each input tone: its own products (ωᵢ, 2ωᵢ) plus
// every cross product, attributed to the lower-frequency parent. Limited
// to the hearing band and divided by the largest AC amplitude of the whole
// output. Tones with nothing audible are nullopt.
std::vector<std::optional<Spectrum>> distorted_tone_spectra(std::span<const Tone> input,
                                                            double bias,
                                                            const ModelConfig& config);

// Mean-removed normalized cross-correlation at zero lag.
// Throws UsageError on length mismatch or empty buffers and
// UndefinedCorrelationError when either buffer is constant.
double linearity_metric(std::span<const double> input, std::span<const double> output);

// Time-domain rendering of the input tones (plus an optional dc offset) and
// of an expanded spectrum.
Waveform render_tones(std::span<const Tone> input, double duration, double sample_rate,
                      double dc_offset = 0.0);
Waveform render_expanded(const ExpandedSpectrum& spectrum, double duration, double sample_rate);

struct SweepEntry {
  double bias = 0.0;
  ExpandedSpectrum spectrum;
  std::vector<std::optional<Spectrum>> tone_spectra;
  std::vector<ScoredPair> assessments;  // every tone pair a < b with both tones audible
  WeightedGraph graph;                  // consonance graph over the tone labels
  double linearity = 0.0;
};

// One entry per bias in ascending order. Entries are computed in parallel.
std::vector<SweepEntry> bias_sweep(std::span<const Tone> input, const AmplifierConfig& amp,
                                   const ModelConfig& config);

nlohmann::json sweep_to_json(std::span<const Tone> input, std::span<const SweepEntry> sweep);

}  // namespace consonoscope
