#include "consonoscope/amplifier.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "consonoscope/errors.hpp"
#include "consonoscope/graph_io.hpp"

namespace consonoscope {

namespace {

constexpr double kMergeTolerance = 1e-9;

bool same_frequency(double x, double y) {
  return std::abs(x - y) <= kMergeTolerance * std::max(std::abs(x), std::abs(y));
}

struct Product {
  double frequency;
  double amplitude;
  std::size_t parent;
};

void validate_input(std::span<const Tone> input, double bias) {
  if (input.empty()) throw UsageError("amplifier input needs at least one tone");
  if (!(bias >= 0.0) || !std::isfinite(bias)) throw UsageError("bias must be nonnegative");
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!(input[i].frequency > 0.0) || !std::isfinite(input[i].frequency))
      throw UsageError("tone frequencies must be positive");
    if (!(input[i].amplitude >= 0.0) || !std::isfinite(input[i].amplitude))
      throw UsageError("tone amplitudes must be nonnegative");
    for (std::size_t j = 0; j < i; ++j)
      if (same_frequency(input[i].frequency, input[j].frequency))
        throw UsageError("duplicate input frequency; merge coincident tones first");
  }
}

// Every AC product with its parent tone, plus the dc total.
std::vector<Product> products(std::span<const Tone> input, double bias, double& dc) {
  std::vector<Product> out;
  dc = bias * bias;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto& t = input[i];
    dc += t.amplitude * t.amplitude / 2.0;
    out.push_back({t.frequency, 2.0 * bias * t.amplitude, i});
    out.push_back({2.0 * t.frequency, t.amplitude * t.amplitude / 2.0, i});
  }
  for (std::size_t i = 0; i < input.size(); ++i) {
    for (std::size_t j = i + 1; j < input.size(); ++j) {
      const double amp = input[i].amplitude * input[j].amplitude;
      const std::size_t parent = input[i].frequency < input[j].frequency ? i : j;
      out.push_back({input[i].frequency + input[j].frequency, amp, parent});
      // Inputs are distinct, so the difference frequency is never zero.
      out.push_back({std::abs(input[i].frequency - input[j].frequency), amp, parent});
    }
  }
  return out;
}

// Sorts by frequency and merges coincident components; drops zero amplitudes.
std::vector<Partial> merge(std::vector<Product> items) {
  std::sort(items.begin(), items.end(),
            [](const Product& a, const Product& b) { return a.frequency < b.frequency; });
  std::vector<Partial> out;
  for (std::size_t k = 0; k < items.size();) {
    const double f = items[k].frequency;
    double amp = 0.0;
    while (k < items.size() && same_frequency(items[k].frequency, f)) amp += items[k++].amplitude;
    if (amp > 0.0) out.push_back({f, amp, static_cast<int>(out.size()) + 1});
  }
  return out;
}

}  // namespace

std::vector<Tone> just_major_triad_tones(double base_frequency) {
  if (!(base_frequency > 0.0)) throw DomainError("base frequency must be positive");
  return {{"C", base_frequency, 1.0},
          {"E", base_frequency * 5.0 / 4.0, 1.0 / 3.0},
          {"G", base_frequency * 3.0 / 2.0, 1.0 / 5.0}};
}

void AmplifierConfig::validate() const {
  if (!(bias >= 0.0) || !std::isfinite(bias)) throw UsageError("bias must be nonnegative");
  if (biases_sweep.empty()) throw UsageError("bias sweep must not be empty");
  for (std::size_t i = 0; i < biases_sweep.size(); ++i) {
    if (!(biases_sweep[i] >= 0.0) || !std::isfinite(biases_sweep[i]))
      throw UsageError("sweep biases must be nonnegative");
    if (i > 0 && !(biases_sweep[i - 1] < biases_sweep[i]))
      throw UsageError("sweep biases must be strictly ascending");
  }
  if (!(render_seconds > 0.0)) throw UsageError("render_seconds must be positive");
  if (!(sample_rate > 0.0)) throw UsageError("sample_rate must be positive");
}

double ExpandedSpectrum::amplitude_at(double frequency) const {
  for (const auto& p : partials)
    if (same_frequency(p.frequency, frequency)) return p.magnitude;
  return 0.0;
}

ExpandedSpectrum square_expand(std::span<const Tone> input, double bias) {
  validate_input(input, bias);
  ExpandedSpectrum out;
  out.partials = merge(products(input, bias, out.dc));
  return out;
}

std::vector<std::optional<Spectrum>> distorted_tone_spectra(std::span<const Tone> input,
                                                            double bias,
                                                            const ModelConfig& config) {
  validate_input(input, bias);
  config.validate();
  double dc = 0.0;
  const auto all = products(input, bias, dc);
  double peak = 0.0;
  for (const auto& p : merge(all)) peak = std::max(peak, p.magnitude);

  std::vector<std::optional<Spectrum>> out(input.size());
  for (std::size_t t = 0; t < input.size(); ++t) {
    std::vector<Product> own;
    for (const auto& p : all)
      if (p.parent == t && p.frequency >= config.hearing_min && p.frequency <= config.hearing_max)
        own.push_back(p);
    auto partials = merge(std::move(own));
    if (partials.empty() || peak <= 0.0) continue;
    for (auto& p : partials) p.magnitude /= peak;
    out[t] = Spectrum(input[t].frequency, std::move(partials));
  }
  return out;
}

double linearity_metric(std::span<const double> input, std::span<const double> output) {
  if (input.size() != output.size()) throw UsageError("waveforms must have equal length");
  if (input.empty()) throw UsageError("waveforms must not be empty");
  const double n = static_cast<double>(input.size());
  const double mean_in = std::accumulate(input.begin(), input.end(), 0.0) / n;
  const double mean_out = std::accumulate(output.begin(), output.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < input.size(); ++k) {
    const double x = input[k] - mean_in;
    const double y = output[k] - mean_out;
    sxy += x * y;
    sxx += x * x;
    syy += y * y;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw UndefinedCorrelationError("correlation is undefined for a constant waveform");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

Waveform render_tones(std::span<const Tone> input, double duration, double sample_rate,
                      double dc_offset) {
  std::vector<Voice> voices;
  for (const auto& t : input)
    voices.push_back({Spectrum(t.frequency, {{t.frequency, t.amplitude, 1}}), {}});
  return render_waveform(voices, duration, sample_rate, dc_offset);
}

Waveform render_expanded(const ExpandedSpectrum& spectrum, double duration, double sample_rate) {
  std::vector<Voice> voices;
  if (!spectrum.partials.empty())
    voices.push_back({Spectrum(spectrum.partials.front().frequency, spectrum.partials), {}});
  return render_waveform(voices, duration, sample_rate, spectrum.dc);
}

std::vector<SweepEntry> bias_sweep(std::span<const Tone> input, const AmplifierConfig& amp,
                                   const ModelConfig& config) {
  amp.validate();
  config.validate();
  validate_input(input, 0.0);

  const auto reference = render_tones(input, amp.render_seconds, amp.sample_rate);
  std::vector<std::string> labels;
  for (const auto& t : input) labels.push_back(t.label);

  auto run_one = [&](double bias) {
    SweepEntry e;
    e.bias = bias;
    e.spectrum = square_expand(input, bias);
    e.tone_spectra = distorted_tone_spectra(input, bias, config);
    for (std::size_t a = 0; a < input.size(); ++a)
      for (std::size_t b = a + 1; b < input.size(); ++b)
        if (e.tone_spectra[a] && e.tone_spectra[b])
          e.assessments.push_back(
              {a, b, assess_interval(*e.tone_spectra[a], *e.tone_spectra[b], config)});
    e.graph = build_graph(labels, e.assessments, GraphKind::Consonance);
    const auto out = render_expanded(e.spectrum, amp.render_seconds, amp.sample_rate);
    e.linearity = linearity_metric(reference.samples, out.samples);
    return e;
  };

  std::vector<std::future<SweepEntry>> jobs;
  for (double bias : amp.biases_sweep) jobs.push_back(std::async(std::launch::async, run_one, bias));
  std::vector<SweepEntry> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

nlohmann::json sweep_to_json(std::span<const Tone> input, std::span<const SweepEntry> sweep) {
  nlohmann::json tones = nlohmann::json::array();
  for (const auto& t : input)
    tones.push_back({{"label", t.label}, {"frequency", t.frequency}, {"amplitude", t.amplitude}});

  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : sweep) {
    nlohmann::json partials = nlohmann::json::array();
    for (const auto& p : e.spectrum.partials)
      partials.push_back({{"frequency", p.frequency}, {"amplitude", p.magnitude}});
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& pair : e.assessments) {
      pairs.push_back({{"a", input[pair.a].label},
                       {"b", input[pair.b].label},
                       {"consonance", pair.assessment.consonance},
                       {"dissonance", pair.assessment.dissonance},
                       {"is_consonant", pair.assessment.is_consonant},
                       {"is_dissonant", pair.assessment.is_dissonant}});
    }
    entries.push_back({{"bias", e.bias},
                       {"dc", e.spectrum.dc},
                       {"partials", partials},
                       {"assessments", pairs},
                       {"graph", graph_to_json(e.graph)},
                       {"linearity", e.linearity}});
  }
  return {{"tones", tones}, {"sweep", entries}};
}

}  // namespace consonoscope
