#include "consonoscope/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

#include "consonoscope/errors.hpp"
#include "consonoscope/format.hpp"

namespace consonoscope {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  auto lines = split(text, '\n');
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

double parse_number(std::string_view field) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw UsageError("not a number: '" + std::string(field) + "'");
  return value;
}

std::size_t node_index(const std::vector<std::string>& nodes, const std::string& label) {
  const auto it = std::find(nodes.begin(), nodes.end(), label);
  if (it == nodes.end()) throw UsageError("edge refers to unknown node '" + label + "'");
  return static_cast<std::size_t>(std::distance(nodes.begin(), it));
}

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string export_dot(const WeightedGraph& graph) {
  double max_weight = 0.0;
  for (const auto& e : graph.edges) max_weight = std::max(max_weight, e.weight);

  std::ostringstream os;
  os << "graph " << to_string(graph.kind) << " {\n";
  for (const auto& node : graph.nodes) os << "  " << quoted(node) << ";\n";
  for (const auto& e : graph.edges) {
    const double pen = max_weight > 0.0 ? 6.0 * e.weight / max_weight : 0.0;
    os << "  " << quoted(graph.nodes.at(e.a)) << " -- " << quoted(graph.nodes.at(e.b))
       << " [weight=\"" << fixed(e.weight) << "\", penwidth=\"" << fixed(pen, 3) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

WeightedGraph parse_dot(std::string_view text) {
  static const std::regex header(R"re(^graph (consonance|dissonance) \{$)re");
  static const std::regex node(R"re(^\s*"((?:[^"\\]|\\.)*)";$)re");
  static const std::regex edge(
      R"re(^\s*"((?:[^"\\]|\\.)*)" -- "((?:[^"\\]|\\.)*)" \[weight="([^"]+)", penwidth="[^"]+"\];$)re");
  auto unescape = [](std::string s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;
      out += s[i];
    }
    return out;
  };

  const auto lines = lines_of(text);
  std::smatch m;
  if (lines.size() < 2) throw UsageError("DOT text too short");
  std::string first(lines.front());
  if (!std::regex_match(first, m, header)) throw UsageError("DOT header not recognised");
  WeightedGraph graph{graph_kind_from_string(m[1].str()), {}, {}};
  if (lines.back() != "}") throw UsageError("DOT text must end with '}'");

  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    std::string line(lines[i]);
    if (std::regex_match(line, m, edge)) {
      const auto a = node_index(graph.nodes, unescape(m[1].str()));
      const auto b = node_index(graph.nodes, unescape(m[2].str()));
      graph.edges.push_back({std::min(a, b), std::max(a, b), parse_number(m[3].str())});
    } else if (std::regex_match(line, m, node)) {
      graph.nodes.push_back(unescape(m[1].str()));
    } else {
      throw UsageError("unrecognised DOT line: '" + line + "'");
    }
  }
  return graph;
}

WeightedGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("graph JSON does not parse: ") + e.what());
  }
  try {
    WeightedGraph graph{graph_kind_from_string(doc.at("kind").get<std::string>()),
                        doc.at("nodes").get<std::vector<std::string>>(),
                        {}};
    for (const auto& e : doc.at("edges")) {
      const auto a = node_index(graph.nodes, e.at("a").get<std::string>());
      const auto b = node_index(graph.nodes, e.at("b").get<std::string>());
      graph.edges.push_back({std::min(a, b), std::max(a, b), e.at("weight").get<double>()});
    }
    return graph;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("graph JSON has the wrong shape: ") + e.what());
  }
}

}  // namespace

GraphFormat graph_format_from_string(std::string_view text) {
  if (text == "dot") return GraphFormat::Dot;
  if (text == "json") return GraphFormat::Json;
  throw UsageError("graph format must be 'dot' or 'json', got '" + std::string(text) + "'");
}

std::string_view extension(GraphFormat format) {
  return format == GraphFormat::Dot ? "dot" : "json";
}

nlohmann::json graph_to_json(const WeightedGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges)
    edges.push_back({{"a", graph.nodes.at(e.a)}, {"b", graph.nodes.at(e.b)}, {"weight", e.weight}});
  return {{"edges", edges}, {"kind", std::string(to_string(graph.kind))}, {"nodes", graph.nodes}};
}

std::string export_graph(const WeightedGraph& graph, GraphFormat format) {
  if (format == GraphFormat::Dot) return export_dot(graph);
  return to_fixed_json(graph_to_json(graph)) + "\n";
}

WeightedGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Dot ? parse_dot(text) : parse_json(text);
}

std::string export_matrix_csv(const ScaleAnalysis& analysis) {
  const auto& names = pitch_names();
  std::string out;
  auto block = [&](std::string_view title, const PitchMatrix& m) {
    out += title;
    for (const auto& n : names) out += "," + n;
    out += '\n';
    for (std::size_t p = 0; p < kScalePitches; ++p) {
      out += names[p];
      for (std::size_t q = 0; q < kScalePitches; ++q) out += "," + fixed(m[p][q]);
      out += '\n';
    }
  };
  block("consonance", analysis.consonance);
  block("dissonance", analysis.dissonance);
  return out;
}

MatrixCsv parse_matrix_csv(std::string_view text) {
  const auto lines = lines_of(text);
  constexpr std::size_t kBlock = kScalePitches + 1;
  if (lines.size() != 2 * kBlock)
    throw UsageError("matrix CSV must have " + std::to_string(2 * kBlock) + " lines");

  MatrixCsv out;
  auto read_block = [&](std::size_t offset, std::string_view title, PitchMatrix& m) {
    const auto header = split(lines[offset], ',');
    if (header.size() != kBlock || header[0] != title)
      throw UsageError("matrix CSV block header for '" + std::string(title) + "' is malformed");
    std::vector<std::string> labels(header.begin() + 1, header.end());
    if (out.labels.empty()) out.labels = labels;
    else if (out.labels != labels) throw UsageError("matrix CSV blocks disagree on labels");
    for (std::size_t p = 0; p < kScalePitches; ++p) {
      const auto fields = split(lines[offset + 1 + p], ',');
      if (fields.size() != kBlock || fields[0] != out.labels[p])
        throw UsageError("matrix CSV row " + std::to_string(p) + " is malformed");
      for (std::size_t q = 0; q < kScalePitches; ++q) m[p][q] = parse_number(fields[q + 1]);
    }
  };
  read_block(0, "consonance", out.consonance);
  read_block(kBlock, "dissonance", out.dissonance);
  return out;
}

std::string export_triads_csv(std::span<const TriadAssessment> triads) {
  std::string out =
      "temperament,quality,root,root_hz,third_hz,fifth_hz,consonance,dissonance,"
      "cons_root_third,cons_root_fifth,cons_third_fifth,"
      "diss_root_third,diss_root_fifth,diss_third_fifth\n";
  const auto& names = pitch_names();
  for (const auto& t : triads) {
    out += std::string(to_string(t.temperament)) + "," + std::string(to_string(t.quality)) + "," +
           names[static_cast<std::size_t>(t.root_index)];
    for (double f : t.frequencies) out += "," + fixed(f);
    out += "," + fixed(t.total_consonance) + "," + fixed(t.total_dissonance);
    for (const auto& p : t.pair_scores) out += "," + fixed(p.consonance);
    for (const auto& p : t.pair_scores) out += "," + fixed(p.dissonance);
    out += '\n';
  }
  return out;
}

nlohmann::json assessment_to_json(const IntervalAssessment& assessment) {
  nlohmann::json matches = nlohmann::json::array();
  for (const auto& m : assessment.matches) {
    matches.push_back({{"ref_index", m.ref_index},
                       {"other_index", m.other_index},
                       {"delta_f", m.delta_f},
                       {"band", std::string(to_string(m.band))}});
  }
  return {{"consonance", assessment.consonance},
          {"dissonance", assessment.dissonance},
          {"is_consonant", assessment.is_consonant},
          {"is_dissonant", assessment.is_dissonant},
          {"matches", matches}};
}

}  // namespace consonoscope
