#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchow::numerics {

using cplx = std::complex<double>;

/// A point of the x-sphere handed to densities. Finite points are stored as
/// center + offset so that x - e stays exact when e is the disk center;
/// points near infinity are stored through w = 1/x.
struct Place {
  cplx center{0.0};
  cplx offset{0.0};
  bool at_infinity = false;

  cplx x() const { return at_infinity ? 1.0 / offset : center + offset; }
  /// log|x - e|
  double log_abs_minus(cplx e) const;
  /// log|x|^k style helper: log|x|
  double log_abs_x() const;
};

struct QuadratureOptions {
  /// Requested accuracy, relative to the integral of |integrand| per component.
  double tol = 1e-8;
  /// Upper bound on live cells.
  std::size_t max_cells = 400000;
  /// Disk radius around singular points as a fraction of their minimal gap.
  double disk_factor = 0.1;
  /// Ratio between consecutive radial rings of the graded polar mesh.
  double grading = 0.5;
  int grading_levels = 40;
  /// Evaluate cells with OpenMP.
  bool parallel = true;
};

/// A downstream step needed a converged integral and did not get one
/// (budget exhausted); callers treat this as indeterminate, not as failure.
struct not_converged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t cells_used = 0;
  double tolerance_requested = 0.0;
  bool converged = false;
};

struct VectorQuadratureResult {
  std::vector<double> values;
  std::vector<double> errors;
  std::vector<double> l1;  // integral of |component|
  std::size_t cells_used = 0;
  double tolerance_requested = 0.0;
  bool converged = false;

  QuadratureResult component(std::size_t k) const;
};

/// Real densities on the x-plane (with respect to Lebesgue area), finite
/// away from `singular_points` and infinity, where they may blow up like an
/// integrable |x - e|^-1 or log|x - e|.
struct PlaneIntegrand {
  std::size_t components = 1;
  std::vector<cplx> singular_points;
  /// Writes `components` values; must be pure (called concurrently).
  std::function<void(const Place&, double*)> density;
};

/// Adaptive tensor Gauss-Kronrod (7/15) cubature over the whole plane. A
/// smooth partition of unity splits the plane into polar disks around the
/// singular points, an exterior disk in w = 1/x, and a bounded middle box.
/// Cells are summed in a fixed order, so serial and parallel runs agree bit
/// for bit.
VectorQuadratureResult integrate_plane(const PlaneIntegrand& integrand, const QuadratureOptions& options);

/// Merges points closer than a relative 1e-9; the first representative wins.
std::vector<cplx> merge_points(const std::vector<cplx>& points);

}  // namespace hyperchow::numerics
