#pragma once

// Scale-wide pairwise analysis, triads, the five-temperament report, and
// consonance/dissonance graphs.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "consonoscope/consonance.hpp"
#include "consonoscope/spectral.hpp"
#include "consonoscope/temperament.hpp"

namespace consonoscope {

using PitchMatrix = std::array<std::array<double, kScalePitches>, kScalePitches>;

struct ScoreFlags {
  bool consonant = false;
  bool dissonant = false;
  friend bool operator==(const ScoreFlags&, const ScoreFlags&) = default;
};

using FlagMatrix = std::array<std::array<ScoreFlags, kScalePitches>, kScalePitches>;

struct ScaleAnalysis {
  Scale scale;
  ModelConfig config;
  PitchMatrix consonance{};  // symmetric; diagonal holds the unison self-score
  PitchMatrix dissonance{};  // symmetric
  FlagMatrix flags{};
};

// Assesses every pitch pair of the scale (p ≤ q) using harmonic spectra built
// with `config` and mirrors the results. Rows are computed in parallel.
ScaleAnalysis scale_matrix(const Scale& scale, const ModelConfig& config);

enum class TriadQuality { Minor, Major };

std::string_view to_string(TriadQuality quality);

struct TriadAssessment {
  Temperament temperament = Temperament::EqualTemperament;
  int root_index = 0;
  TriadQuality quality = TriadQuality::Major;
  std::array<double, 3> frequencies{};  // root, third, fifth
  // root–third, root–fifth, third–fifth
  std::array<IntervalAssessment, 3> pair_scores{};
  double total_consonance = 0.0;
  double total_dissonance = 0.0;
};

// Scale position of the third/fifth above `root_index`, folded to
// (index, octave_shift) so index stays within [0, 12].
struct PitchPosition {
  int index = 0;
  int octave_shift = 0;
};
PitchPosition fold_position(int position);

// Root in [0, 11]; the third is root+3 (minor) or root+4 (major) semitone
// positions and the fifth root+7, doubled by octave when past C2.
TriadAssessment triad_assessment(const Scale& scale, TriadQuality quality, int root_index,
                                 const ModelConfig& config);

struct TemperamentReport {
  double base_frequency = kDefaultBaseFrequency;
  std::vector<ScaleAnalysis> scales;     // kAllTemperaments order
  std::vector<TriadAssessment> triads;   // temperament, then minor/major, then root 0..11
};

TemperamentReport temperament_report(double base_frequency, const ModelConfig& config);

enum class GraphKind { Consonance, Dissonance };

std::string_view to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view text);

struct GraphEdge {
  std::size_t a = 0;  // a < b
  std::size_t b = 0;
  double weight = 0.0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct WeightedGraph {
  GraphKind kind = GraphKind::Consonance;
  std::vector<std::string> nodes;
  std::vector<GraphEdge> edges;  // undirected, sorted by (a, b)

  double total_weight() const;
  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

// One edge per unordered pair p < q whose flag is set and whose score is
// positive; weight = score. No self-loops.
WeightedGraph build_graph(const ScaleAnalysis& analysis, GraphKind kind);

// Same rule over an arbitrary labelled score/flag pair set.
struct ScoredPair {
  std::size_t a = 0;
  std::size_t b = 0;
  IntervalAssessment assessment;
};
WeightedGraph build_graph(std::vector<std::string> nodes, const std::vector<ScoredPair>& pairs,
                          GraphKind kind);

}  // namespace consonoscope
