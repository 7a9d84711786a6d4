#include "consonoscope/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "consonoscope/errors.hpp"

namespace consonoscope {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double value, const char* key) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw UsageError(std::string(key) + " must be a positive finite number");
}

}  // namespace

std::string_view to_string(WeightingMode mode) {
  return mode == WeightingMode::Literal ? "literal" : "proximity";
}

WeightingMode weighting_mode_from_string(std::string_view text) {
  if (text == "literal") return WeightingMode::Literal;
  if (text == "proximity") return WeightingMode::Proximity;
  throw UsageError("mode must be 'literal' or 'proximity', got '" + std::string(text) + "'");
}

void ModelConfig::validate() const {
  if (max_partials < 1) throw UsageError("partials must be at least 1");
  require_positive(decay_rate, "decay");
  require_positive(f_c, "fc");
  require_positive(f_d, "fd");
  if (!(f_c < f_d)) throw UsageError("fd must exceed fc");
  if (!std::isfinite(hearing_min) || hearing_min < 0.0)
    throw UsageError("hearing_min must be a nonnegative finite number");
  require_positive(hearing_max, "hearing_max");
  if (!(hearing_min < hearing_max)) throw UsageError("hearing_max must exceed hearing_min");
  if (!std::isfinite(consonance_threshold)) throw UsageError("cons_threshold must be finite");
  if (!std::isfinite(dissonance_threshold)) throw UsageError("diss_threshold must be finite");
}

double normalize_phase(double radians) {
  double wrapped = std::remainder(radians, kTwoPi);  // [−π, π]
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

double cents(double f_low, double f_high) {
  if (!(f_low > 0.0) || !(f_high > 0.0))
    throw DomainError("cents requires positive frequencies");
  return 1200.0 * std::log2(f_high / f_low);
}

PhasorComponent phasor_sum(std::span<const PhasorComponent> components) {
  if (components.empty()) throw UsageError("phasor_sum needs at least one component");
  double x = 0.0;
  double y = 0.0;
  double total = 0.0;
  for (const auto& c : components) {
    if (c.amplitude < 0.0) throw UsageError("phasor amplitude must be nonnegative");
    x += c.amplitude * std::cos(c.phase);
    y += c.amplitude * std::sin(c.phase);
    total += c.amplitude;
  }
  const double magnitude = std::hypot(x, y);
  if (magnitude <= 1e-12 * total) return {0.0, 0.0};
  return {magnitude, normalize_phase(std::atan2(y, x))};
}

std::string_view to_string(PerceptualClass cls) {
  switch (cls) {
    case PerceptualClass::Tuned: return "tuned";
    case PerceptualClass::SlowBeat: return "slow_beat";
    case PerceptualClass::Rough: return "rough";
    case PerceptualClass::SeparateTones: return "separate_tones";
  }
  return "unknown";
}

PerceptualClass classify_gap(double delta_f) {
  if (std::isnan(delta_f) || delta_f < 0.0)
    throw DomainError("frequency gap must be nonnegative");
  if (delta_f < 2.0) return PerceptualClass::Tuned;
  if (delta_f < 10.0) return PerceptualClass::SlowBeat;
  if (delta_f < 60.0) return PerceptualClass::Rough;
  return PerceptualClass::SeparateTones;
}

Spectrum::Spectrum(double fundamental, std::vector<Partial> partials)
    : fundamental_(fundamental), partials_(std::move(partials)) {
  if (!(fundamental_ > 0.0) || !std::isfinite(fundamental_))
    throw UsageError("spectrum fundamental must be positive");
  if (partials_.empty()) throw UsageError("spectrum must contain at least one partial");
  for (std::size_t k = 0; k < partials_.size(); ++k) {
    const auto& p = partials_[k];
    if (!(p.frequency > 0.0) || !std::isfinite(p.frequency))
      throw UsageError("partial frequency must be positive");
    if (!(p.magnitude >= 0.0) || !std::isfinite(p.magnitude))
      throw UsageError("partial magnitude must be nonnegative");
    if (k > 0 && !(partials_[k - 1].frequency < p.frequency))
      throw UsageError("partials must be strictly ascending in frequency");
  }
}

Spectrum Spectrum::scaled(double gain) const {
  if (!(gain >= 0.0)) throw UsageError("spectrum gain must be nonnegative");
  auto copy = partials_;
  for (auto& p : copy) p.magnitude *= gain;
  return Spectrum(fundamental_, std::move(copy));
}

double harmonic_magnitude(int index, double decay_rate) {
  return std::exp(-decay_rate * static_cast<double>(index - 1));
}

Spectrum harmonic_spectrum(double f0, const ModelConfig& config, HearingBand band) {
  if (!(f0 > 0.0) || !std::isfinite(f0)) throw DomainError("fundamental must be positive");
  config.validate();
  std::vector<Partial> partials;
  partials.reserve(static_cast<std::size_t>(config.max_partials));
  for (int i = 1; i <= config.max_partials; ++i) {
    const double f = f0 * i;
    if (band == HearingBand::Enforce && (f < config.hearing_min || f > config.hearing_max))
      continue;
    partials.push_back({f, harmonic_magnitude(i, config.decay_rate), i});
  }
  if (partials.empty())
    throw EmptySpectrumError("no harmonic of " + std::to_string(f0) +
                             " Hz falls inside the hearing band");
  return Spectrum(f0, std::move(partials));
}

Waveform render_waveform(std::span<const Voice> voices, double duration,
                         double sample_rate, double dc_offset) {
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw UsageError("duration must be positive");
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
    throw UsageError("sample rate must be positive");
  for (const auto& v : voices) {
    if (!v.phases.empty() && v.phases.size() != v.spectrum.size())
      throw UsageError("phase list must be empty or match the partial count");
  }

  Waveform out;
  out.sample_rate = sample_rate;
  const auto count = static_cast<std::size_t>(std::llround(duration * sample_rate));
  out.samples.assign(count, dc_offset);

  for (const auto& v : voices) {
    const auto& partials = v.spectrum.partials();
    for (std::size_t p = 0; p < partials.size(); ++p) {
      const double f = partials[p].frequency;
      const double m = partials[p].magnitude;
      const double phase = v.phases.empty() ? 0.0 : v.phases[p];
      if (2.0 * f >= sample_rate) out.aliased = true;
      if (m == 0.0) continue;
      for (std::size_t k = 0; k < count; ++k) {
        // Reduce f·k modulo the rate before scaling, keeping the cosine
        // argument small over long buffers.
        const double cycles = std::fmod(f * static_cast<double>(k), sample_rate) / sample_rate;
        out.samples[k] += m * std::cos(kTwoPi * cycles + phase);
      }
    }
  }
  return out;
}

std::vector<std::size_t> envelope_maxima(std::span<const double> samples,
                                         std::size_t half_window) {
  std::vector<std::size_t> peaks;
  if (half_window == 0 || samples.size() < 2 * half_window + 1) return peaks;
  for (std::size_t k = half_window; k + half_window < samples.size(); ++k) {
    const double here = std::abs(samples[k]);
    bool is_max = true;
    for (std::size_t j = k - half_window; j <= k + half_window && is_max; ++j) {
      const double other = std::abs(samples[j]);
      if (other > here || (other == here && j < k)) is_max = false;
    }
    if (is_max) peaks.push_back(k);
  }
  return peaks;
}

}  // namespace consonoscope
