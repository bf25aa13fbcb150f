#pragma once

#include <string>
#include <vector>

namespace hyperchow::cli {

struct PlotPoint {
  double x, y, error;
};

/// Standalone SVG: polyline through the points with vertical error bars.
std::string svg_plot(const std::vector<PlotPoint>& points, const std::string& x_label, const std::string& y_label);

}  // namespace hyperchow::cli
