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

#pragma once

#include <string>
#include <vector>

// Standalone SVG line charts: axes, legend, one polyline per series.

namespace qae {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartLayout {
  double width = 860.0;
  double height = 520.0;
  double margin_left = 70.0;
  double margin_right = 170.0;  // room for the legend
  double margin_top = 30.0;
  double margin_bottom = 50.0;
};

std::string render_svg_chart(const std::vector<Series>& series,
                             const std::string& x_label, const std::string& y_label,
                             const ChartLayout& layout = ChartLayout{});

void write_svg_chart(const std::string& path, const std::vector<Series>& series,
                     const std::string& x_label, const std::string& y_label);

/// Chart from a CSV: x = first column, one series per requested column.
/// Missing columns are errors.
void emit_plot(const std::string& csv_path, const std::vector<std::string>& columns,
               const std::string& out_path);

}  // namespace qae
