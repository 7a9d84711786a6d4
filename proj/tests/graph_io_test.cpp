#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "consonoscope/errors.hpp"
#include "consonoscope/format.hpp"
#include "consonoscope/graph_io.hpp"

namespace consonoscope {
namespace {

WeightedGraph labelled(std::vector<GraphEdge> edges, GraphKind kind = GraphKind::Consonance) {
  const auto& names = pitch_names();
  return WeightedGraph{kind, {names.begin(), names.end()}, std::move(edges)};
}

std::size_t count_lines_containing(const std::string& text, std::string_view needle) {
  std::istringstream is(text);
  std::size_t n = 0;
  for (std::string line; std::getline(is, line);)
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

double round6(double x) { return std::stod(fixed(x)); }

TEST(Format, FixedDecimals) {
  EXPECT_EQ(fixed(1.0), "1.000000");
  EXPECT_EQ(fixed(2.3820703211), "2.382070");
  EXPECT_EQ(fixed(-0.0000001), "0.000000");
  EXPECT_EQ(fixed(-1.5, 3), "-1.500");
  EXPECT_EQ(fixed(261.6256), "261.625600");
}

TEST(Format, FixedJsonSortsKeysAndFixesFloats) {
  const nlohmann::json doc = {{"z", 1.5}, {"a", {1, 2.25}}, {"m", "text"}, {"b", true}};
  EXPECT_EQ(to_fixed_json(doc), R"({"a":[1,2.250000],"b":true,"m":"text","z":1.500000})");
}

TEST(ExportGraph, EmptyJson) {
  EXPECT_EQ(export_graph(labelled({}), GraphFormat::Json),
            R"({"edges":[],"kind":"consonance","nodes":["C","C#","D","D#","E","F","F#","G","G#","A","A#","B","C2"]})"
            "\n");
}

TEST(ExportGraph, OneEdgeRoundTrips) {
  const auto g = labelled({{0, 7, 2.5}});
  for (auto f : {GraphFormat::Json, GraphFormat::Dot})
    EXPECT_EQ(parse_graph(export_graph(g, f), f), g) << extension(f);
}

TEST(ExportGraph, DotEdgeLinesAndPenwidth) {
  const auto g = labelled({{0, 4, 1.0}, {0, 7, 3.0}, {5, 9, 1.5}}, GraphKind::Dissonance);
  const auto dot = export_graph(g, GraphFormat::Dot);
  EXPECT_EQ(count_lines_containing(dot, " -- "), 3u);
  EXPECT_EQ(dot.rfind("graph dissonance {\n", 0), 0u);
  EXPECT_NE(dot.find(R"("C" -- "G" [weight="3.000000", penwidth="6.000"];)"), std::string::npos);
  EXPECT_NE(dot.find(R"("C" -- "E" [weight="1.000000", penwidth="2.000"];)"), std::string::npos);
}

TEST(ExportGraph, AnalysisGraphsRoundTripAtExportPrecision) {
  ModelConfig c;
  c.consonance_threshold = 0.5;
  c.dissonance_threshold = 0.2;
  for (auto kind : kAllTemperaments) {
    const auto a = scale_matrix(build_scale(kind), c);
    for (auto gk : {GraphKind::Consonance, GraphKind::Dissonance}) {
      const auto g = build_graph(a, gk);
      for (auto f : {GraphFormat::Json, GraphFormat::Dot}) {
        const auto text = export_graph(g, f);
        const auto back = parse_graph(text, f);
        ASSERT_EQ(back.edges.size(), g.edges.size());
        EXPECT_EQ(back.nodes, g.nodes);
        EXPECT_EQ(back.kind, g.kind);
        for (std::size_t k = 0; k < g.edges.size(); ++k) {
          EXPECT_EQ(back.edges[k].a, g.edges[k].a);
          EXPECT_EQ(back.edges[k].b, g.edges[k].b);
          EXPECT_EQ(back.edges[k].weight, round6(g.edges[k].weight));
        }
        EXPECT_EQ(export_graph(back, f), text);
      }
    }
  }
}

TEST(ExportGraph, QuotesAwkwardLabels) {
  WeightedGraph g{GraphKind::Consonance, {"a \"b\"", "c\\d"}, {{0, 1, 1.25}}};
  for (auto f : {GraphFormat::Json, GraphFormat::Dot})
    EXPECT_EQ(parse_graph(export_graph(g, f), f), g);
}

TEST(ParseGraph, RejectsMalformed) {
  EXPECT_THROW(parse_graph("graph x {\n}\n", GraphFormat::Dot), UsageError);
  EXPECT_THROW(parse_graph("graph consonance {\n  \"C\";\n  junk\n}\n", GraphFormat::Dot),
               UsageError);
  EXPECT_THROW(parse_graph("{", GraphFormat::Json), UsageError);
  EXPECT_THROW(parse_graph(R"({"edges":[{"a":"X","b":"C","weight":1}],"kind":"consonance","nodes":["C"]})",
                           GraphFormat::Json),
               UsageError);
  EXPECT_THROW(graph_format_from_string("svg"), UsageError);
}

TEST(MatrixCsv, Shape) {
  const auto a = scale_matrix(build_scale(Temperament::JustMajor), ModelConfig{});
  const auto csv = export_matrix_csv(a);
  std::istringstream is(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 28u);
  EXPECT_EQ(lines[0], "consonance,C,C#,D,D#,E,F,F#,G,G#,A,A#,B,C2");
  EXPECT_EQ(lines[14], "dissonance,C,C#,D,D#,E,F,F#,G,G#,A,A#,B,C2");
  for (const auto& l : lines) EXPECT_EQ(std::count(l.begin(), l.end(), ','), 13) << l;
}

TEST(MatrixCsv, ZeroMatrixIsAllZeros) {
  const ScaleAnalysis a{build_scale(Temperament::EqualTemperament), ModelConfig{}, {}, {}, {}};
  const auto csv = export_matrix_csv(a);
  std::istringstream is(csv);
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.rfind("consonance", 0) == 0 || line.rfind("dissonance", 0) == 0) continue;
    ++rows;
    std::istringstream fields(line);
    std::string field;
    std::getline(fields, field, ',');  // label
    while (std::getline(fields, field, ',')) EXPECT_EQ(field, "0.000000");
  }
  EXPECT_EQ(rows, 26);
}

TEST(MatrixCsv, RoundTripsAndTransposeMatches) {
  for (auto kind : kAllTemperaments) {
    const auto a = scale_matrix(build_scale(kind), ModelConfig{});
    const auto csv = export_matrix_csv(a);
    const auto back = parse_matrix_csv(csv);
    EXPECT_EQ(back.labels.size(), 13u);
    for (std::size_t p = 0; p < kScalePitches; ++p) {
      for (std::size_t q = 0; q < kScalePitches; ++q) {
        EXPECT_EQ(back.consonance[p][q], round6(a.consonance[p][q]));
        EXPECT_EQ(back.dissonance[p][q], round6(a.dissonance[p][q]));
        EXPECT_EQ(back.consonance[p][q], back.consonance[q][p]);
      }
    }
    EXPECT_EQ(export_matrix_csv(a), csv);
  }
}

TEST(MatrixCsv, RejectsMalformed) {
  EXPECT_THROW(parse_matrix_csv("consonance,C\n"), UsageError);
  auto csv = export_matrix_csv(scale_matrix(build_scale(Temperament::JustMajor), ModelConfig{}));
  csv.replace(csv.find("0.000000"), 8, "zero");
  EXPECT_THROW(parse_matrix_csv(csv), UsageError);
}

TEST(TriadsCsv, OneRowPerTriad) {
  const auto r = temperament_report(kDefaultBaseFrequency, ModelConfig{});
  const auto csv = export_triads_csv(r.triads);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 121);
  EXPECT_EQ(csv.rfind("temperament,quality,root,", 0), 0u);
  EXPECT_NE(csv.find("\njust_major,major,C,261.625600,327.032000,392.438400,"), std::string::npos);
  EXPECT_EQ(export_triads_csv(r.triads), csv);
}

TEST(AssessmentJson, Fields) {
  const ModelConfig c;
  const auto a = assess_interval(harmonic_spectrum(440, c), harmonic_spectrum(660, c), c);
  const auto doc = assessment_to_json(a);
  EXPECT_EQ(doc.at("matches").size(), a.matches.size());
  EXPECT_DOUBLE_EQ(doc.at("consonance").get<double>(), a.consonance);
  EXPECT_EQ(doc.at("matches")[0].at("band"), "neutral");  // 440 vs 660
  EXPECT_EQ(doc.at("matches")[2].at("band"), "consonant");  // 1320 vs 1320
}

}  // namespace
}  // namespace consonoscope
