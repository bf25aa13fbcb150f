#pragma once

#include "hyperchow/curve.hpp"
#include "hyperchow/numerics/curve_model.hpp"

namespace hyperchow::numerics {

struct LambdaIntegrals {
  QuadratureResult mass;     // (i/2) int dx/y ^ conj(dx/y)
  QuadratureResult log_int;  // same form against log|x|
  QuadratureResult value;    // their ratio, I(lambda)
};

/// I(lambda) = int log|x| theta with theta the unit-mass invariant form on
/// y^2 = x (x - 1) (x - lambda). Throws std::domain_error for lambda in {0, 1}.
LambdaIntegrals lambda_integrals(cplx lambda, const QuadratureOptions& options);
QuadratureResult I_of_lambda(cplx lambda, const QuadratureOptions& options);

/// Orthonormalization of the holomorphic differentials. `rows` are the
/// coefficient vectors of the input basis nu_a = sum_j rows(a, j) x^(j-1) dx/y
/// (identity by default). gram(a, b) = <nu_a, nu_b> = (i/2) int nu_a ^ conj(nu_b);
/// with gram = L L^* (Cholesky), transform = L^-1 rows, so zeta = transform * mu
/// has <zeta_a, zeta_b> = delta_ab and zeta_a lies in the span of nu_1..nu_a.
struct GramData {
  Eigen::MatrixXcd basis;      // rows as given
  Eigen::MatrixXcd gram;       // of the monomial basis
  Eigen::MatrixXcd transform;  // zeta = transform * mu
  double max_error = 0;        // largest quadrature error among the entries
  std::size_t cells_used = 0;
  bool converged = false;
};

/// Throws std::runtime_error when the Gram matrix is not numerically
/// positive definite.
GramData gram_normalize(const ComplexCurveModel& c, const QuadratureOptions& options,
                        const Eigen::MatrixXcd& rows = Eigen::MatrixXcd());
/// Recomputes <zeta_a, zeta_b> by quadrature; returns the largest deviation
/// from the identity.
double orthonormality_defect(const ComplexCurveModel& c, const GramData& g, const QuadratureOptions& options);
/// Same basis with zeta_a and zeta_b exchanged.
GramData swap_basis(const GramData& g, int a, int b);

/// tau = (i/2)(zeta_1 ^ conj(zeta_1) - zeta_2 ^ conj(zeta_2)).
VolumeForm tau_form(const GramData& g);
/// theta = (i/2) sum_a zeta_a ^ conj(zeta_a) / genus, a unit-mass form.
VolumeForm theta_form(const GramData& g);

/// <R(K), tau> in the curve-integral gauge: both curves of K carry the same
/// function and the restricted invariant form does not see translations, so
/// the pairing is 2 int_C log|f| tau.
QuadratureResult regulator_pairing_K(const ComplexCurveModel& c, const CurveFunction& f, const GramData& g,
                                     const QuadratureOptions& options);
/// Same for an exact curve and two rational branch points; f is the function
/// with divisor 2 w1 - 2 w2. Throws std::invalid_argument for genus < 2.
QuadratureResult regulator_pairing_K(const HyperellipticCurve& curve, const CurvePoint& w1, const CurvePoint& w2,
                                     const QuadratureOptions& options);

}  // namespace hyperchow::numerics
