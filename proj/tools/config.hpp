#pragma once

#include "hyperchow/numerics/quadrature.hpp"
#include "hyperchow/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyperchow::cli {

/// Raised for malformed input files and arguments (exit code 64).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Curve data plus optional numeric settings, read from YAML (JSON files
/// parse as well):
///
///   name: some label
///   curve: {roots: ["0", "1", "2"], scale: "3"}   # or {coefficients: [...]}, lowest degree first
///   w1: branch 0
///   w2: infinity
///   t: ["x 22/5", "affine 2 3"]
///   datum: ["branch 1", "branch 2", "branch 4", "infinity"]   # optional a', a'', p', p''
///   tolerance: 1e-8      # optional
///   budget: 400000       # optional
///   seed: 7              # optional
///
/// Points: "infinity", "infinity +", "infinity -", "branch X", "affine X Y",
/// or "x X" for the point over X with positive y.
struct CurveConfig {
  report::CycleData data;
  std::vector<CurvePoint> datum;
  std::optional<double> tolerance;
  std::optional<std::size_t> budget;
  std::optional<std::uint64_t> seed;
};

CurveConfig load_curve_config(const std::string& path);
CurvePoint parse_point(const HyperellipticCurve& curve, const std::string& text);
/// "p/q", a decimal, or a complex number "a+bi" / "a-bi" / "bi".
numerics::cplx parse_lambda(const std::string& text);

}  // namespace hyperchow::cli
