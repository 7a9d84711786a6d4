#pragma once

// Text formats for analysis results: DOT/JSON graphs, CSV matrices, the
// triad table, and JSON for single assessments. All numbers are written at
// six decimals with a period separator; output is byte-deterministic.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "consonoscope/analysis.hpp"

namespace consonoscope {

enum class GraphFormat { Dot, Json };

GraphFormat graph_format_from_string(std::string_view text);
std::string_view extension(GraphFormat format);

// DOT: an undirected `graph <kind> { ... }` listing every node, then one
// `"a" -- "b" [weight="w", penwidth="p"];` line per edge, where penwidth is
// 6·w / max weight.
// JSON: {"edges":[{"a":..,"b":..,"weight":..}],"kind":..,"nodes":[..]}.
std::string export_graph(const WeightedGraph& graph, GraphFormat format);

// Inverse of export_graph for either format. Weights come back at the
// exported six-decimal precision. Throws UsageError on malformed input.
WeightedGraph parse_graph(std::string_view text, GraphFormat format);

nlohmann::json graph_to_json(const WeightedGraph& graph);

// Two blocks, consonance then dissonance; each is a header row
// `<block>,C,...,C2` followed by 13 rows `<label>,v0,...,v12`.
std::string export_matrix_csv(const ScaleAnalysis& analysis);

struct MatrixCsv {
  std::vector<std::string> labels;
  PitchMatrix consonance{};
  PitchMatrix dissonance{};
};

MatrixCsv parse_matrix_csv(std::string_view text);

// One row per triad with header
// temperament,quality,root,root_hz,third_hz,fifth_hz,consonance,dissonance,
// cons_root_third,cons_root_fifth,cons_third_fifth,
// diss_root_third,diss_root_fifth,diss_third_fifth
std::string export_triads_csv(std::span<const TriadAssessment> triads);

nlohmann::json assessment_to_json(const IntervalAssessment& assessment);

}  // namespace consonoscope
