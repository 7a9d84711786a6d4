#pragma once

// Closest-partial matching between two spectra and the resulting
// consonance/dissonance scores.

#include <cstddef>
#include <string_view>
#include <vector>

#include "consonoscope/spectral.hpp"

namespace consonoscope {

enum class MatchBand { Consonant, Dissonant, Neutral };

std::string_view to_string(MatchBand band);

// Band for a gap: Consonant below f_c, Dissonant in [f_c, f_d), else Neutral.
MatchBand band_for_gap(double delta_f, const ModelConfig& config);

struct PartialMatch {
  std::size_t ref_index = 0;    // position in the reference spectrum's partials()
  std::size_t other_index = 0;  // position in the other spectrum's partials()
  double delta_f = 0.0;         // |f_other − f_ref|, Hz
  MatchBand band = MatchBand::Neutral;

  friend bool operator==(const PartialMatch&, const PartialMatch&) = default;
};

enum class Reference { First, Second };

struct MatchResult {
  Reference reference = Reference::First;
  std::vector<PartialMatch> matches;  // one per reference partial, in order
};

// The spectrum with the lower fundamental is the reference (ties: first
// argument). Each reference partial is matched to the nearest partial of the
// other spectrum; an exact tie goes to the lower-frequency candidate. The
// matching is directed, so several reference partials may share a target.
MatchResult match_partials(const Spectrum& a, const Spectrum& b, const ModelConfig& config);

struct IntervalAssessment {
  double consonance = 0.0;
  double dissonance = 0.0;
  bool is_consonant = false;
  bool is_dissonant = false;
  std::vector<PartialMatch> matches;

  friend bool operator==(const IntervalAssessment&, const IntervalAssessment&) = default;
};

// Contribution of one match to its band's sum under the active weighting
// mode; zero for Neutral matches.
double match_weight(const PartialMatch& match, double ref_magnitude, double other_magnitude,
                    const ModelConfig& config);

// Scores every match of match_partials and sets the threshold flags.
// Symmetric in its spectrum arguments whenever the fundamentals differ.
IntervalAssessment assess_interval(const Spectrum& a, const Spectrum& b,
                                   const ModelConfig& config);

}  // namespace consonoscope
