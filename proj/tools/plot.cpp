#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace hyperchow::cli {

std::string svg_plot(const std::vector<PlotPoint>& points, const std::string& x_label, const std::string& y_label) {
  const double width = 640, height = 400, margin = 60;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!points.empty()) {
    x0 = x1 = points.front().x;
    y0 = y1 = points.front().y;
    for (const auto& p : points) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y - p.error);
      y1 = std::max(y1, p.y + p.error);
    }
  }
  if (x1 - x0 < 1e-12) x1 = x0 + 1;
  if (y1 - y0 < 1e-12) y1 = y0 + 1;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto sx = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
  auto sy = [&](double y) { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
    out << "<text x=\"" << sx(xv) << "\" y=\"" << height - margin + 18 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << std::setprecision(3) << xv << std::setprecision(2) << "</text>\n";
    out << "<text x=\"" << margin - 6 << "\" y=\"" << sy(yv) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
        << std::setprecision(4) << yv << std::setprecision(2) << "</text>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  out << "<text x=\"18\" y=\"" << height / 2 << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << height / 2 << ")\">" << y_label << "</text>\n";
  if (!points.empty()) {
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : points) out << sx(p.x) << "," << sy(p.y) << " ";
    out << "\"/>\n";
    for (const auto& p : points) {
      out << "<line x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y - p.error) << "\" x2=\"" << sx(p.x) << "\" y2=\""
          << sy(p.y + p.error) << "\" stroke=\"firebrick\"/>\n";
      out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hyperchow::cli
