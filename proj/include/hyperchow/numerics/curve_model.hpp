#pragma once

#include "hyperchow/function_field.hpp"
#include "hyperchow/numerics/quadrature.hpp"

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

namespace hyperchow::numerics {

/// y^2 = lead * prod (x - e) over C. The sheet y = +sqrt_h(x) uses the
/// product of principal square roots, continuous off the horizontal cuts
/// running left from each root; sheet -1 is its negative.
class ComplexCurveModel {
 public:
  ComplexCurveModel(cplx lead, std::vector<cplx> roots);
  static ComplexCurveModel from_polynomial(const Polynomial& h);
  /// y^2 = x (x - 1) (x - lambda)
  static ComplexCurveModel legendre(cplx lambda);

  cplx lead() const { return lead_; }
  const std::vector<cplx>& roots() const { return roots_; }
  int degree() const { return static_cast<int>(roots_.size()); }
  int genus() const { return (degree() - 1) / 2; }
  bool odd() const { return degree() % 2 == 1; }

  cplx h(cplx x) const;
  /// log|h|, exact near roots through the place representation.
  double log_abs_h(const Place& p) const;
  cplx sqrt_h(cplx x) const;
  /// |y^2 - h(x)| / max(1, |h(x)|)
  double residual(cplx x, cplx y) const;

 private:
  cplx lead_;
  std::vector<cplx> roots_;
};

/// Hermitian coefficient matrix M over the basis x^(j-1) dx / y. Density per
/// sheet with respect to area: Re sum M_jk x^(j-1) conj(x)^(k-1) / |h(x)|,
/// which is (i/2) sum M_jk mu_j ^ conj(mu_k).
struct VolumeForm {
  Eigen::MatrixXcd coefficients;

  static VolumeForm monomial(int genus, int j, int k);  // zero-based j, k
  /// sum_a sign_a (i/2) zeta_a ^ conj(zeta_a) with zeta_a = sum_j rows(a, j) mu_j
  static VolumeForm from_rows(const Eigen::MatrixXcd& rows, const std::vector<double>& signs);
  double density(const ComplexCurveModel& c, const Place& p) const;
  bool hermitian(double tol = 1e-12) const;
};

/// log|F| for a function on the curve, per sheet. F = R(x) * S(x, y) where
/// R = lead * prod (x - z)^m and S = a + b y is optional.
class CurveFunction {
 public:
  static CurveFunction rational(cplx lead, std::vector<std::pair<cplx, int>> divisor);
  static CurveFunction from_element(const FunctionFieldElement& f);

  /// out[0]: sheet y = +sqrt_h, out[1]: sheet y = -sqrt_h; `sheet_sign`
  /// flips the global tag.
  void log_abs(const ComplexCurveModel& c, const Place& p, double sheet_sign, double out[2]) const;
  std::vector<cplx> singular_points() const;
  bool sheet_dependent() const { return !b_.empty(); }
  /// Degree as a map from the curve to the line, for functions of x alone.
  int degree_on_curve() const;
  /// Value on sheet y at a finite x (for checks).
  cplx value(cplx x, cplx y) const;

 private:
  cplx lead_{1.0};
  std::vector<std::pair<cplx, int>> divisor_;
  std::vector<cplx> a_, b_;  // coefficients, lowest degree first
  cplx norm_lead_{1.0};
  std::vector<cplx> norm_roots_;  // a^2 - b^2 h
};

struct CurveIntegrand {
  VolumeForm form;
  std::optional<CurveFunction> log_factor;
};

/// Integrals over the whole curve (both sheets) of form * log|F| (or of the
/// form alone), all components on shared cells.
VectorQuadratureResult integrate_curve(const ComplexCurveModel& c, const std::vector<CurveIntegrand>& parts,
                                       const QuadratureOptions& options, double sheet_sign = 1.0);
QuadratureResult integrate_curve(const ComplexCurveModel& c, const CurveIntegrand& part,
                                 const QuadratureOptions& options, double sheet_sign = 1.0);

}  // namespace hyperchow::numerics
