#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "consonoscope/analysis.hpp"
#include "consonoscope/errors.hpp"
#include "oracles/naive_oracle.hpp"

namespace consonoscope {
namespace {

double matrix_sum(const PitchMatrix& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (double v : row) s += v;
  return s;
}

TEST(ScaleMatrix, SymmetricWithZeroDissonanceDiagonal) {
  const ModelConfig c;
  for (auto kind : kAllTemperaments) {
    const auto a = scale_matrix(build_scale(kind), c);
    for (std::size_t p = 0; p < kScalePitches; ++p) {
      EXPECT_EQ(a.dissonance[p][p], 0.0);
      for (std::size_t q = 0; q < kScalePitches; ++q) {
        EXPECT_EQ(a.consonance[p][q], a.consonance[q][p]);
        EXPECT_EQ(a.dissonance[p][q], a.dissonance[q][p]);
        EXPECT_EQ(a.flags[p][q], a.flags[q][p]);
      }
    }
  }
}

TEST(ScaleMatrix, EqualFifthBeatsTritone) {
  const auto a = scale_matrix(build_scale(Temperament::EqualTemperament), ModelConfig{});
  EXPECT_GT(a.consonance[0][7], a.consonance[0][6]);
  // Independent double-loop values.
  oracle::Params p;
  const double c = 261.6256;
  EXPECT_NEAR(a.consonance[0][7], oracle::score(c, c * std::exp2(7.0 / 12), p).cons, 1e-12);
  EXPECT_NEAR(a.consonance[0][6], oracle::score(c, c * std::exp2(6.0 / 12), p).cons, 1e-12);
}

TEST(ScaleMatrix, DiagonalEqualWhereTruncationAgrees) {
  const ModelConfig c;
  const auto scale = build_scale(Temperament::EqualTemperament);
  const auto a = scale_matrix(scale, c);
  std::map<std::size_t, double> by_count;
  for (std::size_t p = 0; p < kScalePitches; ++p) {
    const auto n = harmonic_spectrum(scale.frequencies[p], c).size();
    const auto [it, fresh] = by_count.emplace(n, a.consonance[p][p]);
    if (!fresh) EXPECT_NEAR(a.consonance[p][p], it->second, 1e-9) << p;
    const double geometric = (1.0 - std::exp(-0.16 * n)) / (1.0 - std::exp(-0.16));
    EXPECT_NEAR(a.consonance[p][p], geometric, 1e-9) << p;
  }
  EXPECT_GT(by_count.size(), 1u);  // upper pitches lose top partials
}

TEST(ScaleMatrix, DeterministicAcrossRuns) {
  const ModelConfig c;
  const auto scale = build_scale(Temperament::MeanTone);
  const auto a = scale_matrix(scale, c);
  const auto b = scale_matrix(scale, c);
  EXPECT_EQ(a.consonance, b.consonance);
  EXPECT_EQ(a.dissonance, b.dissonance);
}

TEST(ScaleMatrix, GoldenConsonanceSums) {
  // Whole-matrix consonance sums (diagonal included), frozen from an
  // independent prototype run at the default configuration.
  const std::map<Temperament, double> golden = {
      {Temperament::EqualTemperament, 137.38262460343068},
      {Temperament::Pythagorean, 166.9697507881478},
      {Temperament::JustMajor, 187.2348691840086},
      {Temperament::MeanTone, 143.45203423388386},
      {Temperament::Werckmeister, 148.2206046624011},
  };
  for (const auto& [kind, want] : golden) {
    const auto a = scale_matrix(build_scale(kind), ModelConfig{});
    EXPECT_NEAR(matrix_sum(a.consonance), want, 1e-9) << to_string(kind);
  }
}

TEST(TriadAssessment, JustMajorCTriadRatios) {
  const auto t = triad_assessment(build_scale(Temperament::JustMajor), TriadQuality::Major, 0,
                                  ModelConfig{});
  EXPECT_DOUBLE_EQ(t.frequencies[1] / t.frequencies[0], 1.25);
  EXPECT_DOUBLE_EQ(t.frequencies[2] / t.frequencies[0], 1.5);
  EXPECT_DOUBLE_EQ(t.frequencies[2] / t.frequencies[1], 1.2);
}

TEST(TriadAssessment, EqualMinorTriadSteps) {
  const auto t = triad_assessment(build_scale(Temperament::EqualTemperament),
                                  TriadQuality::Minor, 0, ModelConfig{});
  EXPECT_NEAR(t.frequencies[1] / t.frequencies[0], std::exp2(3.0 / 12), 1e-12);
  EXPECT_NEAR(t.frequencies[2] / t.frequencies[0], std::exp2(7.0 / 12), 1e-12);
}

TEST(TriadAssessment, FoldsPastTheOctave) {
  const auto scale = build_scale(Temperament::JustMajor);
  const auto t = triad_assessment(scale, TriadQuality::Major, 9, ModelConfig{});  // A major
  EXPECT_DOUBLE_EQ(t.frequencies[1], 2.0 * scale.frequencies[1]);  // C#'
  EXPECT_DOUBLE_EQ(t.frequencies[2], 2.0 * scale.frequencies[4]);  // E'
  EXPECT_EQ(fold_position(12).index, 12);
  EXPECT_EQ(fold_position(13).index, 1);
  EXPECT_EQ(fold_position(13).octave_shift, 1);
}

TEST(TriadAssessment, TotalsArePairSums) {
  const ModelConfig c;
  for (auto kind : kAllTemperaments) {
    const auto scale = build_scale(kind);
    for (int root = 0; root < 12; ++root) {
      const auto t = triad_assessment(scale, TriadQuality::Minor, root, c);
      EXPECT_EQ(t.total_consonance, t.pair_scores[0].consonance + t.pair_scores[1].consonance +
                                        t.pair_scores[2].consonance);
      EXPECT_EQ(t.total_dissonance, t.pair_scores[0].dissonance + t.pair_scores[1].dissonance +
                                        t.pair_scores[2].dissonance);
    }
  }
}

TEST(TriadAssessment, JustCMajorOutscoresMeanToneCSharpMajor) {
  const ModelConfig c;
  const auto just = triad_assessment(build_scale(Temperament::JustMajor), TriadQuality::Major, 0, c);
  const auto mean = triad_assessment(build_scale(Temperament::MeanTone), TriadQuality::Major, 1, c);
  EXPECT_GT(just.total_consonance, mean.total_consonance);
}

TEST(TriadAssessment, InvalidRoot) {
  const auto s = build_scale(Temperament::JustMajor);
  EXPECT_THROW(triad_assessment(s, TriadQuality::Major, 12, ModelConfig{}), UsageError);
  EXPECT_THROW(triad_assessment(s, TriadQuality::Major, -1, ModelConfig{}), UsageError);
}

TEST(TemperamentReport, CardinalityAndOrder) {
  const auto r = temperament_report(kDefaultBaseFrequency, ModelConfig{});
  ASSERT_EQ(r.scales.size(), 5u);
  ASSERT_EQ(r.triads.size(), 120u);
  for (std::size_t k = 0; k < r.triads.size(); ++k) {
    const auto& t = r.triads[k];
    EXPECT_EQ(t.temperament, kAllTemperaments[k / 24]);
    EXPECT_EQ(t.quality, (k / 12) % 2 == 0 ? TriadQuality::Minor : TriadQuality::Major);
    EXPECT_EQ(t.root_index, static_cast<int>(k % 12));
  }
}

TEST(TemperamentReport, MeanToneFavoursCMajorOverCSharpMajor) {
  const auto r = temperament_report(kDefaultBaseFrequency, ModelConfig{});
  auto find = [&](Temperament kind, TriadQuality q, int root) {
    for (const auto& t : r.triads)
      if (t.temperament == kind && t.quality == q && t.root_index == root) return t;
    throw std::runtime_error("missing triad");
  };
  EXPECT_GT(find(Temperament::MeanTone, TriadQuality::Major, 0).total_consonance,
            find(Temperament::MeanTone, TriadQuality::Major, 1).total_consonance);
}

ScaleAnalysis zero_analysis() {
  return ScaleAnalysis{build_scale(Temperament::EqualTemperament), ModelConfig{}, {}, {}, {}};
}

TEST(BuildGraph, ZeroMatricesGiveNoEdges) {
  const auto a = zero_analysis();
  EXPECT_TRUE(build_graph(a, GraphKind::Consonance).edges.empty());
  EXPECT_TRUE(build_graph(a, GraphKind::Dissonance).edges.empty());
  EXPECT_EQ(build_graph(a, GraphKind::Consonance).nodes.size(), 13u);
}

TEST(BuildGraph, SingleFlaggedEntryGivesOneEdge) {
  auto a = zero_analysis();
  a.consonance[2][9] = a.consonance[9][2] = 7.5;
  a.flags[2][9].consonant = a.flags[9][2].consonant = true;
  a.consonance[4][4] = 9.0;  // diagonal never becomes a self-loop
  a.flags[4][4].consonant = true;
  const auto g = build_graph(a, GraphKind::Consonance);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0], (GraphEdge{2, 9, 7.5}));
  EXPECT_TRUE(build_graph(a, GraphKind::Dissonance).edges.empty());
}

TEST(BuildGraph, EdgeSetEqualsRecomputedThresholdSet) {
  for (double threshold : {5.0, 1.0, 0.3}) {
    ModelConfig c;
    c.consonance_threshold = threshold;
    c.dissonance_threshold = threshold;
    for (auto kind : kAllTemperaments) {
      const auto a = scale_matrix(build_scale(kind), c);
      for (auto gk : {GraphKind::Consonance, GraphKind::Dissonance}) {
        const auto& m = gk == GraphKind::Consonance ? a.consonance : a.dissonance;
        std::vector<GraphEdge> want;
        for (std::size_t p = 0; p < kScalePitches; ++p)
          for (std::size_t q = p + 1; q < kScalePitches; ++q)
            if (m[p][q] >= threshold) want.push_back({p, q, m[p][q]});
        EXPECT_EQ(build_graph(a, gk).edges, want) << to_string(kind) << " " << threshold;
      }
    }
  }
}

TEST(BuildGraph, JustMajorAtLeastAsConnectedAsEqual) {
  for (double threshold : {5.0, 1.0}) {
    ModelConfig c;
    c.consonance_threshold = threshold;
    const auto just = build_graph(scale_matrix(build_scale(Temperament::JustMajor), c),
                                  GraphKind::Consonance);
    const auto equal = build_graph(scale_matrix(build_scale(Temperament::EqualTemperament), c),
                                   GraphKind::Consonance);
    EXPECT_GE(just.total_weight(), equal.total_weight()) << threshold;
  }
}

TEST(BuildGraph, LabelledPairs) {
  IntervalAssessment flagged;
  flagged.consonance = 3.0;
  flagged.is_consonant = true;
  IntervalAssessment quiet;
  quiet.consonance = 1.0;
  const auto g = build_graph({"x", "y", "z"}, {{2, 0, flagged}, {0, 1, quiet}},
                             GraphKind::Consonance);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0], (GraphEdge{0, 2, 3.0}));
}

}  // namespace
}  // namespace consonoscope
