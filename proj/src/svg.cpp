// Copyright 2026 The qae-denoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qae/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qae/io.hpp"

namespace qae {

namespace {

const char* kPalette[] = {"#c0392b", "#2166ac", "#1a7837", "#111111",
                          "#e08214", "#7b3294", "#35978f", "#b2182b"};

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void widen_if_degenerate() {
    if (lo > hi) {  // no data
      lo = 0.0;
      hi = 1.0;
    } else if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

std::string render_svg_chart(const std::vector<Series>& series,
                             const std::string& x_label, const std::string& y_label,
                             const ChartLayout& l) {
  if (series.empty()) throw std::invalid_argument("svg chart: no series");
  Range xr, yr;
  for (const Series& s : series) {
    if (s.x.size() != s.y.size()) {
      throw std::invalid_argument("svg chart: x/y length mismatch in '" + s.label + "'");
    }
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.widen_if_degenerate();
  yr.widen_if_degenerate();

  const double px0 = l.margin_left;
  const double px1 = l.width - l.margin_right;
  const double py0 = l.height - l.margin_bottom;  // y axis is inverted
  const double py1 = l.margin_top;
  auto map_x = [&](double v) { return px0 + (v - xr.lo) / (xr.hi - xr.lo) * (px1 - px0); };
  auto map_y = [&](double v) { return py0 + (v - yr.lo) / (yr.hi - yr.lo) * (py1 - py0); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << l.width
     << "\" height=\"" << l.height << "\" viewBox=\"0 0 " << l.width << " "
     << l.height << "\">\n";
  os << "<rect width=\"" << l.width << "\" height=\"" << l.height
     << "\" fill=\"white\"/>\n";

  // Axes.
  os << "<line x1=\"" << fmt2(px0) << "\" y1=\"" << fmt2(py0) << "\" x2=\""
     << fmt2(px1) << "\" y2=\"" << fmt2(py0)
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << fmt2(px0) << "\" y1=\"" << fmt2(py0) << "\" x2=\""
     << fmt2(px0) << "\" y2=\"" << fmt2(py1)
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Extent labels and axis names.
  os << "<text x=\"" << fmt2(px0) << "\" y=\"" << fmt2(py0 + 18)
     << "\" font-size=\"12\">" << format_double(xr.lo) << "</text>\n";
  os << "<text x=\"" << fmt2(px1) << "\" y=\"" << fmt2(py0 + 18)
     << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(xr.hi)
     << "</text>\n";
  os << "<text x=\"" << fmt2(px0 - 8) << "\" y=\"" << fmt2(py0)
     << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(yr.lo)
     << "</text>\n";
  os << "<text x=\"" << fmt2(px0 - 8) << "\" y=\"" << fmt2(py1 + 4)
     << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(yr.hi)
     << "</text>\n";
  os << "<text x=\"" << fmt2((px0 + px1) / 2) << "\" y=\"" << fmt2(l.height - 12)
     << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << fmt2((py0 + py1) / 2)
     << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << fmt2((py0 + py1) / 2) << ")\">" << y_label << "</text>\n";

  // Series polylines and legend.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < series[i].x.size(); ++k) {
      if (k > 0) os << ' ';
      os << fmt2(map_x(series[i].x[k])) << ',' << fmt2(map_y(series[i].y[k]));
    }
    os << "\"/>\n";
    const double ly = py1 + 16.0 + 18.0 * static_cast<double>(i);
    os << "<line x1=\"" << fmt2(px1 + 10) << "\" y1=\"" << fmt2(ly - 4)
       << "\" x2=\"" << fmt2(px1 + 34) << "\" y2=\"" << fmt2(ly - 4)
       << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << fmt2(px1 + 40) << "\" y=\"" << fmt2(ly)
       << "\" font-size=\"12\">" << series[i].label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg_chart(const std::string& path, const std::vector<Series>& series,
                     const std::string& x_label, const std::string& y_label) {
  write_text_file(path, render_svg_chart(series, x_label, y_label));
}

void emit_plot(const std::string& csv_path, const std::vector<std::string>& columns,
               const std::string& out_path) {
  if (columns.empty()) throw std::invalid_argument("emit_plot: no columns requested");
  const CsvTable table = read_csv(csv_path);
  if (table.columns.empty()) throw std::runtime_error("emit_plot: csv has no header");
  const std::string& x_name = table.columns[0];
  std::vector<Series> series;
  for (const std::string& name : columns) {
    const std::size_t col = table.column_index(name);
    Series s;
    s.label = name;
    for (const auto& row : table.rows) {
      s.x.push_back(row[0]);
      s.y.push_back(row[col]);
    }
    series.push_back(std::move(s));
  }
  write_svg_chart(out_path, series, x_name, "value");
}

}  // namespace qae
