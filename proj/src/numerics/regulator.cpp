#include "hyperchow/numerics/regulator.hpp"

#include "hyperchow/cycles.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <stdexcept>

namespace hyperchow::numerics {

LambdaIntegrals lambda_integrals(cplx lambda, const QuadratureOptions& options) {
  const ComplexCurveModel c = ComplexCurveModel::legendre(lambda);
  const VolumeForm dxy = VolumeForm::monomial(1, 0, 0);
  const auto r = integrate_curve(c, {{dxy, std::nullopt}, {dxy, CurveFunction::rational(1.0, {{0.0, 1}})}}, options);
  LambdaIntegrals out;
  out.mass = r.component(0);
  out.log_int = r.component(1);
  out.value = out.log_int;
  const double m = out.mass.value;
  out.value.value = out.log_int.value / m;
  out.value.error_estimate = (out.log_int.error_estimate + std::abs(out.value.value) * out.mass.error_estimate) / m;
  return out;
}

QuadratureResult I_of_lambda(cplx lambda, const QuadratureOptions& options) {
  return lambda_integrals(lambda, options).value;
}

namespace {

// Hermitian part of m, so that the curve integral returns Re sum m_jk G_jk.
VolumeForm hermitian_part(const Eigen::MatrixXcd& m) {
  VolumeForm v;
  v.coefficients = 0.5 * (m + m.adjoint());
  return v;
}

// sum_jk m_jk G_jk for each matrix, real and imaginary parts on shared cells.
std::vector<cplx> pair_integrals(const ComplexCurveModel& c, const std::vector<Eigen::MatrixXcd>& ms,
                                 const QuadratureOptions& options, double& max_error, std::size_t& cells,
                                 bool& converged) {
  std::vector<CurveIntegrand> parts;
  const cplx minus_i(0.0, -1.0);
  for (const auto& m : ms) {
    parts.push_back({hermitian_part(m), std::nullopt});
    parts.push_back({hermitian_part(minus_i * m), std::nullopt});
  }
  const auto r = integrate_curve(c, parts, options);
  std::vector<cplx> out;
  max_error = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    out.emplace_back(r.values[2 * i], r.values[2 * i + 1]);
    max_error = std::max({max_error, r.errors[2 * i], r.errors[2 * i + 1]});
  }
  cells = r.cells_used;
  converged = r.converged;
  return out;
}

}  // namespace

GramData gram_normalize(const ComplexCurveModel& c, const QuadratureOptions& options, const Eigen::MatrixXcd& rows) {
  const int g = c.genus();
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  GramData out;
  out.basis = rows.size() == 0 ? Eigen::MatrixXcd::Identity(g, g) : rows;
  if (out.basis.rows() != g || out.basis.cols() != g) throw std::invalid_argument("basis must be genus x genus");
  std::vector<Eigen::MatrixXcd> ms;
  std::vector<std::pair<int, int>> slots;
  for (int j = 0; j < g; ++j)
    for (int k = j; k < g; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(g, g);
      m(j, k) = 1.0;
      ms.push_back(m);
      slots.emplace_back(j, k);
    }
  const auto vals = pair_integrals(c, ms, options, out.max_error, out.cells_used, out.converged);
  out.gram = Eigen::MatrixXcd::Zero(g, g);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto [j, k] = slots[i];
    out.gram(j, k) = vals[i];
    out.gram(k, j) = std::conj(vals[i]);
  }
  const Eigen::MatrixXcd nu = out.basis * out.gram * out.basis.adjoint();
  Eigen::LLT<Eigen::MatrixXcd> llt(nu);
  const bool definite = llt.info() == Eigen::Success &&
                        Eigen::MatrixXcd(llt.matrixL()).diagonal().real().minCoeff() > 10.0 * out.max_error;
  if (!definite && !out.converged) throw not_converged("Gram matrix quadrature did not converge within the budget");
  if (llt.info() != Eigen::Success) throw std::runtime_error("Gram matrix is not positive definite");
  const Eigen::MatrixXcd l = llt.matrixL();
  if (l.diagonal().real().minCoeff() <= 10.0 * out.max_error)
    throw std::runtime_error("Gram matrix is not numerically positive definite");
  out.transform = l.triangularView<Eigen::Lower>().solve(out.basis);
  return out;
}

double orthonormality_defect(const ComplexCurveModel& c, const GramData& gd, const QuadratureOptions& options) {
  const Eigen::Index g = gd.transform.rows();
  std::vector<Eigen::MatrixXcd> ms;
  std::vector<std::pair<int, int>> slots;
  for (Eigen::Index a = 0; a < g; ++a)
    for (Eigen::Index b = a; b < g; ++b) {
      // m_jk = T_aj conj(T_bk)
      ms.push_back(gd.transform.row(a).transpose() * gd.transform.row(b).conjugate());
      slots.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  double err = 0;
  std::size_t cells = 0;
  bool conv = false;
  const auto vals = pair_integrals(c, ms, options, err, cells, conv);
  double defect = 0.0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const double target = slots[i].first == slots[i].second ? 1.0 : 0.0;
    defect = std::max(defect, std::abs(vals[i] - target));
  }
  return defect;
}

GramData swap_basis(const GramData& g, int a, int b) {
  GramData out = g;
  out.transform.row(a) = g.transform.row(b);
  out.transform.row(b) = g.transform.row(a);
  out.basis.row(a) = g.basis.row(b);
  out.basis.row(b) = g.basis.row(a);
  return out;
}

VolumeForm tau_form(const GramData& g) {
  if (g.transform.rows() < 2) throw std::invalid_argument("tau needs genus at least 2");
  std::vector<double> signs(g.transform.rows(), 0.0);
  signs[0] = 1.0;
  signs[1] = -1.0;
  return VolumeForm::from_rows(g.transform, signs);
}

VolumeForm theta_form(const GramData& g) {
  const auto n = g.transform.rows();
  return VolumeForm::from_rows(g.transform, std::vector<double>(n, 1.0 / double(n)));
}

QuadratureResult regulator_pairing_K(const ComplexCurveModel& c, const CurveFunction& f, const GramData& g,
                                     const QuadratureOptions& options) {
  QuadratureResult r = integrate_curve(c, CurveIntegrand{tau_form(g), f}, options);
  r.value *= 2.0;
  r.error_estimate *= 2.0;
  return r;
}

QuadratureResult regulator_pairing_K(const HyperellipticCurve& curve, const CurvePoint& w1, const CurvePoint& w2,
                                     const QuadratureOptions& options) {
  if (curve.genus() < 2) throw std::invalid_argument("the pairing needs genus at least 2");
  const JacobianContext j(curve, w1);
  const FunctionFieldElement f = weierstrass_function(j, w1, w2);
  const ComplexCurveModel c = ComplexCurveModel::from_polynomial(curve.h());
  const GramData g = gram_normalize(c, options);
  return regulator_pairing_K(c, CurveFunction::from_element(f), g, options);
}

}  // namespace hyperchow::numerics
