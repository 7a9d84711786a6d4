#include "consonoscope/consonance.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace consonoscope {

std::string_view to_string(MatchBand band) {
  switch (band) {
    case MatchBand::Consonant: return "consonant";
    case MatchBand::Dissonant: return "dissonant";
    case MatchBand::Neutral: return "neutral";
  }
  return "unknown";
}

MatchBand band_for_gap(double delta_f, const ModelConfig& config) {
  if (delta_f < config.f_c) return MatchBand::Consonant;
  if (delta_f < config.f_d) return MatchBand::Dissonant;
  return MatchBand::Neutral;
}

namespace {

// Position of the partial of `other` nearest to f; equidistant neighbours
// resolve to the lower one.
std::size_t nearest_partial(const std::vector<Partial>& other, double f) {
  auto upper = std::lower_bound(other.begin(), other.end(), f,
                                [](const Partial& p, double value) { return p.frequency < value; });
  if (upper == other.begin()) return 0;
  if (upper == other.end()) return other.size() - 1;
  auto lower = std::prev(upper);
  const double below = f - lower->frequency;
  const double above = upper->frequency - f;
  const auto pick = above < below ? upper : lower;
  return static_cast<std::size_t>(std::distance(other.begin(), pick));
}

}  // namespace

MatchResult match_partials(const Spectrum& a, const Spectrum& b, const ModelConfig& config) {
  MatchResult result;
  result.reference = b.fundamental() < a.fundamental() ? Reference::Second : Reference::First;
  const Spectrum& ref = result.reference == Reference::First ? a : b;
  const Spectrum& other = result.reference == Reference::First ? b : a;

  const auto& ref_partials = ref.partials();
  const auto& other_partials = other.partials();
  result.matches.reserve(ref_partials.size());
  for (std::size_t i = 0; i < ref_partials.size(); ++i) {
    const std::size_t j = nearest_partial(other_partials, ref_partials[i].frequency);
    const double delta = std::abs(other_partials[j].frequency - ref_partials[i].frequency);
    result.matches.push_back({i, j, delta, band_for_gap(delta, config)});
  }
  return result;
}

double match_weight(const PartialMatch& match, double ref_magnitude, double other_magnitude,
                    const ModelConfig& config) {
  const double product = ref_magnitude * other_magnitude;
  switch (match.band) {
    case MatchBand::Consonant:
      return config.weighting_mode == WeightingMode::Literal
                 ? product * match.delta_f
                 : product * (config.f_c - match.delta_f) / config.f_c;
    case MatchBand::Dissonant:
      return config.weighting_mode == WeightingMode::Literal
                 ? product * match.delta_f
                 : product * (config.f_d - match.delta_f) / (config.f_d - config.f_c);
    case MatchBand::Neutral:
      break;
  }
  return 0.0;
}

IntervalAssessment assess_interval(const Spectrum& a, const Spectrum& b,
                                   const ModelConfig& config) {
  auto matched = match_partials(a, b, config);
  const Spectrum& ref = matched.reference == Reference::First ? a : b;
  const Spectrum& other = matched.reference == Reference::First ? b : a;

  IntervalAssessment out;
  for (const auto& m : matched.matches) {
    const double w = match_weight(m, ref.partials()[m.ref_index].magnitude,
                                  other.partials()[m.other_index].magnitude, config);
    if (m.band == MatchBand::Consonant) out.consonance += w;
    else if (m.band == MatchBand::Dissonant) out.dissonance += w;
  }
  out.is_consonant = out.consonance >= config.consonance_threshold;
  out.is_dissonant = out.dissonance >= config.dissonance_threshold;
  out.matches = std::move(matched.matches);
  return out;
}

}  // namespace consonoscope
