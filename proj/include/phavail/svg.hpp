#pragma once

#include <string>
#include <vector>

namespace phavail {

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Self-contained SVG 1.1 line chart: axes with ticks, labels, legend.
/// No external assets or scripting.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<ChartSeries>& series);

}  // namespace phavail
