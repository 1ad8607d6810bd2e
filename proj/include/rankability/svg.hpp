#pragma once

#include <string>
#include <vector>

namespace rankability {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Self-contained SVG documents; non-finite points are skipped.
std::string scatter_svg(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<PlotSeries>& series,
                        int width = 640, int height = 480);

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<PlotSeries>& series,
                           int width = 640, int height = 480);

// Grid of pairwise scatter plots of the named columns.
std::string scatter_matrix_svg(const std::vector<std::string>& names,
                               const std::vector<std::vector<double>>& columns, int cell = 170);

}  // namespace rankability
