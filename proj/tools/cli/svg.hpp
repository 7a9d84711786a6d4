#pragma once

// Minimal static SVG renderings: line plots, a two-panel bipartite pitch
// graph, and a labelled heat map.

#include <string>
#include <vector>

#include "consonoscope/analysis.hpp"

namespace consonoscope::cli {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  bool stems = false;  // vertical lines from zero instead of a polyline
};

std::string render_svg(const LinePlot& plot);

// Left column = lower pitch, right column = upper pitch; stroke width tracks
// the score, flagged pairs drawn solid and the rest faint.
std::string render_bipartite_svg(const ScaleAnalysis& analysis);

struct HeatMap {
  std::string title;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<double>> values;  // row-major
};

std::string render_heatmap_svg(const HeatMap& map);

}  // namespace consonoscope::cli
