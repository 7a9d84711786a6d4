#include "consonoscope/analysis.hpp"

#include <algorithm>
#include <future>

#include "consonoscope/errors.hpp"

namespace consonoscope {

namespace {

std::array<Spectrum, kScalePitches> pitch_spectra(const Scale& scale, const ModelConfig& config) {
  auto make = [&](std::size_t i) { return harmonic_spectrum(scale.frequencies[i], config); };
  return {make(0), make(1), make(2), make(3), make(4),  make(5), make(6),
          make(7), make(8), make(9), make(10), make(11), make(12)};
}

}  // namespace

ScaleAnalysis scale_matrix(const Scale& scale, const ModelConfig& config) {
  config.validate();
  const auto spectra = pitch_spectra(scale, config);

  ScaleAnalysis out{scale, config, {}, {}, {}};

  // Each task fills the upper-triangle row p; rows are disjoint so results
  // do not depend on completion order.
  std::vector<std::future<void>> rows;
  rows.reserve(kScalePitches);
  for (std::size_t p = 0; p < kScalePitches; ++p) {
    rows.push_back(std::async(std::launch::async, [&, p] {
      for (std::size_t q = p; q < kScalePitches; ++q) {
        const auto a = assess_interval(spectra[p], spectra[q], config);
        out.consonance[p][q] = a.consonance;
        out.dissonance[p][q] = a.dissonance;
        out.flags[p][q] = {a.is_consonant, a.is_dissonant};
      }
    }));
  }
  for (auto& row : rows) row.get();

  for (std::size_t p = 0; p < kScalePitches; ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      out.consonance[p][q] = out.consonance[q][p];
      out.dissonance[p][q] = out.dissonance[q][p];
      out.flags[p][q] = out.flags[q][p];
    }
  }
  return out;
}

std::string_view to_string(TriadQuality quality) {
  return quality == TriadQuality::Minor ? "minor" : "major";
}

PitchPosition fold_position(int position) {
  if (position < 0) throw UsageError("pitch position must be nonnegative");
  PitchPosition out{position, 0};
  while (out.index > static_cast<int>(kScalePitches) - 1) {
    out.index -= 12;
    ++out.octave_shift;
  }
  return out;
}

TriadAssessment triad_assessment(const Scale& scale, TriadQuality quality, int root_index,
                                 const ModelConfig& config) {
  if (root_index < 0 || root_index > 11)
    throw UsageError("triad root must be in [0, 11], got " + std::to_string(root_index));
  config.validate();

  const int third_offset = quality == TriadQuality::Minor ? 3 : 4;
  const std::array<int, 3> positions = {root_index, root_index + third_offset, root_index + 7};

  TriadAssessment out;
  out.temperament = scale.kind;
  out.root_index = root_index;
  out.quality = quality;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto pos = fold_position(positions[k]);
    out.frequencies[k] = pitch_frequency(scale, pos.index, pos.octave_shift);
  }

  const std::array<Spectrum, 3> spectra = {harmonic_spectrum(out.frequencies[0], config),
                                           harmonic_spectrum(out.frequencies[1], config),
                                           harmonic_spectrum(out.frequencies[2], config)};
  constexpr std::array<std::array<std::size_t, 2>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < 3; ++k) {
    out.pair_scores[k] = assess_interval(spectra[kPairs[k][0]], spectra[kPairs[k][1]], config);
    out.total_consonance += out.pair_scores[k].consonance;
    out.total_dissonance += out.pair_scores[k].dissonance;
  }
  return out;
}

TemperamentReport temperament_report(double base_frequency, const ModelConfig& config) {
  config.validate();
  TemperamentReport report;
  report.base_frequency = base_frequency;
  for (auto kind : kAllTemperaments) {
    const auto scale = build_scale(kind, base_frequency);
    report.scales.push_back(scale_matrix(scale, config));
    for (auto quality : {TriadQuality::Minor, TriadQuality::Major})
      for (int root = 0; root < 12; ++root)
        report.triads.push_back(triad_assessment(scale, quality, root, config));
  }
  return report;
}

std::string_view to_string(GraphKind kind) {
  return kind == GraphKind::Consonance ? "consonance" : "dissonance";
}

GraphKind graph_kind_from_string(std::string_view text) {
  if (text == "consonance") return GraphKind::Consonance;
  if (text == "dissonance") return GraphKind::Dissonance;
  throw UsageError("graph kind must be 'consonance' or 'dissonance', got '" + std::string(text) +
                   "'");
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

WeightedGraph build_graph(const ScaleAnalysis& analysis, GraphKind kind) {
  const auto& names = pitch_names();
  WeightedGraph graph{kind, {names.begin(), names.end()}, {}};
  const auto& scores = kind == GraphKind::Consonance ? analysis.consonance : analysis.dissonance;
  for (std::size_t p = 0; p < kScalePitches; ++p) {
    for (std::size_t q = p + 1; q < kScalePitches; ++q) {
      const auto& flag = analysis.flags[p][q];
      const bool set = kind == GraphKind::Consonance ? flag.consonant : flag.dissonant;
      if (set && scores[p][q] > 0.0) graph.edges.push_back({p, q, scores[p][q]});
    }
  }
  return graph;
}

WeightedGraph build_graph(std::vector<std::string> nodes, const std::vector<ScoredPair>& pairs,
                          GraphKind kind) {
  WeightedGraph graph{kind, std::move(nodes), {}};
  for (const auto& pair : pairs) {
    if (pair.a == pair.b) continue;
    if (pair.a >= graph.nodes.size() || pair.b >= graph.nodes.size())
      throw UsageError("graph edge refers to a missing node");
    const bool set = kind == GraphKind::Consonance ? pair.assessment.is_consonant
                                                   : pair.assessment.is_dissonant;
    const double w =
        kind == GraphKind::Consonance ? pair.assessment.consonance : pair.assessment.dissonance;
    if (set && w > 0.0)
      graph.edges.push_back({std::min(pair.a, pair.b), std::max(pair.a, pair.b), w});
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  return graph;
}

}  // namespace consonoscope
