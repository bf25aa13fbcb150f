#pragma once

#include "hyperchow/divisor.hpp"
#include "hyperchow/samples.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace hyperchow::testing {

using namespace hyperchow::samples;

/// Numeric oracle for valuations: slope of the circle mean of log|F| against
/// log r, with F pulled back along a local analytic parameter t = r e^{i theta}.
/// The circle mean cancels every zero and pole lying outside the circle.
inline int numeric_valuation(const FunctionFieldElement& f, const CurvePoint& p) {
  const HyperellipticCurve& c = f.curve();
  auto hval = [&](std::complex<double> x) { return c.h().evaluate(x); };
  auto point_at = [&](std::complex<double> t) -> std::pair<std::complex<double>, std::complex<double>> {
    switch (p.kind) {
      case PointKind::affine: {
        const std::complex<double> x = p.x.get_d() + t;
        const std::complex<double> y0 = p.y.get_d();
        return {x, y0 * std::sqrt(hval(x) / (y0 * y0))};
      }
      case PointKind::branch: {
        // Solve h(x0 + s) = t^2 for small s by Newton.
        const double x0 = p.x.get_d();
        const Polynomial dh = c.h().derivative();
        std::complex<double> s = t * t / dh.evaluate(x0);
        for (int it = 0; it < 50; ++it) s -= (hval(x0 + s) - t * t) / dh.evaluate(x0 + s);
        return {x0 + s, t};
      }
      case PointKind::infinity: {
        if (c.odd_model()) {
          const std::complex<double> x = 1.0 / (t * t);
          // y ~ sqrt(lc) x^(g + 1/2) = sqrt(lc) t^(-2g-1)
        const std::complex<double> lead = std::sqrt(std::complex<double>(c.h().leading().get_d())) * std::pow(t, -2 * c.genus() - 1);
        return {x, lead * std::sqrt(hval(x) / (lead * lead))};
        }
        const std::complex<double> x = 1.0 / t;
        const double root = c.leading_sqrt()->get_d() * (p.sheet == InfinitySheet::plus ? 1 : -1);
        const std::complex<double> scale = std::pow(x, c.genus() + 1);
        return {x, root * scale * std::sqrt(hval(x) / (c.h().leading().get_d() * scale * scale))};
      }
    }
    return {};
  };
  auto circle_mean = [&](double r) {
    const int samples = 32;
    double acc = 0;
    for (int k = 0; k < samples; ++k) {
      const std::complex<double> t = std::polar(r, 2 * M_PI * (k + 0.5) / samples);
      auto [x, y] = point_at(t);
      acc += std::log(std::abs(f.evaluate(x, y)));
    }
    return acc / samples;
  };
  const double r1 = 1e-3, r2 = 1e-4;
  return static_cast<int>(std::lround((circle_mean(r1) - circle_mean(r2)) / (std::log(r1) - std::log(r2))));
}

}  // namespace hyperchow::testing
