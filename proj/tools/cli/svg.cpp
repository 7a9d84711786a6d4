#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "consonoscope/format.hpp"

namespace consonoscope::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 60.0;
constexpr std::size_t kMaxPoints = 4000;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(w, 0) + "\" height=\"" +
         fixed(h, 0) + "\" viewBox=\"0 0 " + fixed(w, 0) + " " + fixed(h, 0) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text_at(double x, double y, const std::string& s, const char* anchor = "middle") {
  return "<text x=\"" + fixed(x, 2) + "\" y=\"" + fixed(y, 2) + "\" text-anchor=\"" + anchor +
         "\">" + escape(s) + "</text>\n";
}

// Keeps the shape of long traces by taking the min and max of each bucket.
std::vector<std::size_t> decimate(std::size_t n, const std::vector<double>& y) {
  std::vector<std::size_t> keep;
  if (n <= kMaxPoints) {
    for (std::size_t i = 0; i < n; ++i) keep.push_back(i);
    return keep;
  }
  const std::size_t buckets = kMaxPoints / 2;
  for (std::size_t b = 0; b < buckets; ++b) {
    const std::size_t lo = b * n / buckets, hi = (b + 1) * n / buckets;
    std::size_t imin = lo, imax = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      if (y[i] < y[imin]) imin = i;
      if (y[i] > y[imax]) imax = i;
    }
    keep.push_back(std::min(imin, imax));
    if (imin != imax) keep.push_back(std::max(imin, imax));
  }
  return keep;
}

}  // namespace

std::string render_svg(const LinePlot& plot) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : plot.series) {
    for (double v : s.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
    for (double v : s.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
  }
  if (plot.stems) y0 = std::min(y0, 0.0);
  if (!(x0 < x1)) x0 -= 0.5, x1 += 0.5;
  if (!(y0 < y1)) y0 -= 0.5, y1 += 0.5;

  const double pw = kWidth - 2 * kMargin, ph = kHeight - 2 * kMargin;
  auto sx = [&](double v) { return kMargin + (v - x0) / (x1 - x0) * pw; };
  auto sy = [&](double v) { return kHeight - kMargin - (v - y0) / (y1 - y0) * ph; };

  std::ostringstream os;
  os << header(kWidth, kHeight);
  os << text_at(kWidth / 2, 24, plot.title);
  os << "<rect x=\"" << fixed(kMargin, 2) << "\" y=\"" << fixed(kMargin, 2) << "\" width=\""
     << fixed(pw, 2) << "\" height=\"" << fixed(ph, 2)
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << text_at(kMargin, kHeight - kMargin + 16, fixed(x0, 3));
  os << text_at(kWidth - kMargin, kHeight - kMargin + 16, fixed(x1, 3));
  os << text_at(kMargin - 6, kHeight - kMargin, fixed(y0, 3), "end");
  os << text_at(kMargin - 6, kMargin + 4, fixed(y1, 3), "end");
  os << text_at(kWidth / 2, kHeight - 16, plot.x_label);
  os << "<text x=\"16\" y=\"" << fixed(kHeight / 2, 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << fixed(kHeight / 2, 2) << ")\">" << escape(plot.y_label) << "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    const std::size_t n = std::min(s.x.size(), s.y.size());
    if (plot.stems) {
      for (std::size_t i = 0; i < n; ++i)
        os << "<line x1=\"" << fixed(sx(s.x[i]), 2) << "\" y1=\"" << fixed(sy(0.0), 2)
           << "\" x2=\"" << fixed(sx(s.x[i]), 2) << "\" y2=\"" << fixed(sy(s.y[i]), 2)
           << "\" stroke=\"" << color << "\"/>\n";
    } else {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
      bool first = true;
      for (std::size_t i : decimate(n, s.y)) {
        os << (first ? "" : " ") << fixed(sx(s.x[i]), 2) << "," << fixed(sy(s.y[i]), 2);
        first = false;
      }
      os << "\"/>\n";
    }
    os << "<text x=\"" << fixed(kWidth - kMargin + 4, 2) << "\" y=\"" << fixed(kMargin + 14.0 * k + 10, 2)
       << "\" fill=\"" << color << "\">" << escape(s.name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_bipartite_svg(const ScaleAnalysis& analysis) {
  const auto& names = pitch_names();
  constexpr double panel = 400.0, top = 60.0, step = 26.0;
  const double height = top + step * kScalePitches + 20;
  std::ostringstream os;
  os << header(2 * panel, height);
  os << text_at(panel, 20, std::string(to_string(analysis.scale.kind)));

  auto draw_panel = [&](double x_off, const char* title, const PitchMatrix& m, bool consonance,
                        const char* color) {
    const double left = x_off + 80, right = x_off + panel - 80;
    os << text_at(x_off + panel / 2, 44, title);
    double max_score = 0.0;
    for (std::size_t p = 0; p < kScalePitches; ++p)
      for (std::size_t q = 0; q < kScalePitches; ++q)
        if (p != q) max_score = std::max(max_score, m[p][q]);
    for (std::size_t p = 0; p < kScalePitches; ++p) {
      for (std::size_t q = 0; q < kScalePitches; ++q) {
        if (p == q || m[p][q] <= 0.0 || max_score <= 0.0) continue;
        const auto& f = analysis.flags[p][q];
        const bool flagged = consonance ? f.consonant : f.dissonant;
        os << "<line x1=\"" << fixed(left, 2) << "\" y1=\"" << fixed(top + step * p, 2)
           << "\" x2=\"" << fixed(right, 2) << "\" y2=\"" << fixed(top + step * q, 2)
           << "\" stroke=\"" << color << "\" stroke-width=\"" << fixed(4.0 * m[p][q] / max_score, 3)
           << "\" stroke-opacity=\"" << (flagged ? "0.9" : "0.2") << "\"/>\n";
      }
    }
    for (std::size_t p = 0; p < kScalePitches; ++p) {
      os << text_at(left - 10, top + step * p + 4, names[p], "end");
      os << text_at(right + 10, top + step * p + 4, names[p], "start");
    }
  };
  draw_panel(0, "consonance", analysis.consonance, true, "#2ca02c");
  draw_panel(panel, "dissonance", analysis.dissonance, false, "#d62728");
  os << "</svg>\n";
  return os.str();
}

std::string render_heatmap_svg(const HeatMap& map) {
  constexpr double cell = 36.0, left = 170.0, top = 60.0;
  const double width = left + cell * map.column_labels.size() + 20;
  const double height = top + cell * map.row_labels.size() + 20;
  double max_value = 0.0;
  for (const auto& row : map.values)
    for (double v : row) max_value = std::max(max_value, v);

  std::ostringstream os;
  os << header(width, height);
  os << text_at(width / 2, 20, map.title);
  for (std::size_t c = 0; c < map.column_labels.size(); ++c)
    os << text_at(left + cell * (c + 0.5), top - 8, map.column_labels[c]);
  for (std::size_t r = 0; r < map.values.size(); ++r) {
    os << text_at(left - 8, top + cell * (r + 0.5) + 4, map.row_labels[r], "end");
    for (std::size_t c = 0; c < map.values[r].size(); ++c) {
      const double v = max_value > 0.0 ? map.values[r][c] / max_value : 0.0;
      const int shade = static_cast<int>(std::lround(255.0 * (1.0 - v)));
      os << "<rect x=\"" << fixed(left + cell * c, 2) << "\" y=\"" << fixed(top + cell * r, 2)
         << "\" width=\"" << fixed(cell, 2) << "\" height=\"" << fixed(cell, 2) << "\" fill=\"rgb("
         << shade << "," << shade << "," << shade << ")\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace consonoscope::cli
