#pragma once

#include "hyperchow/numerics/curve_model.hpp"
#include "hyperchow/numerics/periods.hpp"

#include <array>
#include <string>
#include <vector>

namespace hyperchow::numerics {

/// Degree-2 map of the line with h(0) = 0, h(1) = 1, h(oo) = oo and critical
/// values v1, v2 at critical points c1, c2:
///   h(s) = (v1 (s - c2)^2 - v2 (s - c1)^2) / ((s - c2)^2 - (s - c1)^2).
/// The constraints force (c1 / c2)^2 = v1 / v2 and ((1 - c1) / (1 - c2))^2 =
/// (v1 - 1) / (v2 - 1); both square roots are taken principal.
class QuadraticMap {
 public:
  /// Throws std::domain_error when the constraint system degenerates.
  QuadraticMap(cplx v1, cplx v2);

  cplx operator()(cplx s) const;
  cplx derivative(cplx s) const;
  /// The deck involution: h(sigma(s)) = h(s), fixing c1 and c2.
  cplx sigma(cplx s) const;
  /// sigma(oo), the finite pole of h.
  cplx pole() const { return 0.5 * (c1_ + c2_); }
  /// The two solutions of h(s) = value.
  std::pair<cplx, cplx> preimages(cplx value) const;

  cplx v1() const { return v1_; }
  cplx v2() const { return v2_; }
  cplx c1() const { return c1_; }
  cplx c2() const { return c2_; }
  /// Coefficient in h'(s) (s - c2)^-1 (s - c1)^-1 D(s)^2 = k, D the denominator.
  cplx derivative_constant() const { return 2.0 * (v1_ - v2_) * (c1_ - c2_); }
  cplx denominator(cplx s) const { return (c1_ - c2_) * (2.0 * s - c1_ - c2_); }

 private:
  cplx v1_, v2_, c1_, c2_;
};

/// Genus-2 double cover C of E(l1) and E(l2): y^2 = prod (s - e) over
/// h^-1{0, 1, oo}, with the hyperelliptic function f = s, its transform
/// fbar = sigma(s) and g = h(s), where f fbar = c g.
struct BiellipticData {
  QuadraticMap h;
  ComplexCurveModel curve;        // odd model, degree 5 (oo is a branch point)
  std::array<cplx, 2> lambda;     // l1, l2
  cplx y_scale{};                  // y_i = y_scale * y (s - c_i) / D(s)^2
  std::array<EllipticPeriods, 2> periods{};
  /// k_i^*(theta_i), theta_i the unit-mass form on E(l_i)
  std::array<VolumeForm, 2> pulled_back{};
  /// rows (-c2, 1) and (-c1, 1): k_1^* dx/y and k_2^* dx/y up to scale
  Eigen::MatrixXcd elliptic_rows{};
  CurveFunction f{}, fbar{}, g{};
  cplx c{};                       // f fbar / g
  double c_spread = 0;            // max relative deviation of f fbar / g from c
  double commutativity_residual = 0;  // k_i(P) on E(l_i), x(k_i P) = h(f(P))
  double curve_residual = 0;
};

/// Throws std::domain_error for l1 = l2, l_i in {0, 1}, or a degenerate map.
BiellipticData build_bielliptic(cplx lambda1, cplx lambda2, int samples = 20);

struct Verdict {
  double value = 0, error = 0;
  std::string status;  // "nonzero" or "indeterminate"
};
Verdict nonzero_verdict(double value, double error);

struct BiellipticReport {
  BiellipticData data;
  /// I(r, i, C) = int_C k_i^*(theta_i) log|r|, rows f, fbar, g; columns i = 1, 2
  std::array<std::array<QuadratureResult, 2>, 3> integrals{};
  std::array<QuadratureResult, 2> masses{};      // int_C k_i^*(theta_i)
  double splitting_residual = 0;   // I(f, D) + I(fbar, D) - I(g, D), D = theta_1 - theta_2
  double splitting_error = 0;
  double mass_difference = 0;      // int_C (k_1^* theta_1 - k_2^* theta_2)
  double mass_difference_error = 0;
  std::array<double, 2> lambda_values{};  // I(l_i)
  std::array<double, 2> degree_factor{};  // I(g, i, C) / I(l_i)
  double difference_factor = 0;           // I(g, D) / (I(l1) - I(l2))
  Verdict tau_value{};                     // I(f, tau_C), tau_C = D / 2
  bool converged = false;
};

BiellipticReport bielliptic_identity_check(cplx lambda1, cplx lambda2, const QuadratureOptions& options);

/// Etale double cover C -> G of the genus-2 curve G branched over
/// {0, 1, oo, lambda, a1, a2}, with h critical over a1, a2; C is the
/// hyperelliptic curve over h^-1{0, 1, lambda, oo} (genus 3).
struct Genus3Cover {
  QuadraticMap h;
  cplx lambda;
  ComplexCurveModel curve;  // C, degree 7
  ComplexCurveModel base;   // G, degree 5
  ComplexCurveModel elliptic;  // E_lambda
  cplx pi_scale{};  // y_G = pi_scale * y (s - c1)(s - c2) / D^3
  cplx k_scale{};   // y_E = k_scale * y / D^2
  int genus_cover = 0, genus_base = 0;
  int ramification = 0;          // from Riemann-Hurwitz, 0 for an etale cover
  double commutativity_residual = 0;
  double branch_residual = 0;    // h maps C's branch set into {0, 1, lambda, oo}
  double pullback_ratio_spread = 0;  // pi^*(dx/y_G) / ((s - pole) ds / y) constant
  CurveFunction f{}, g{};
};

Genus3Cover build_genus3_cover(cplx lambda, cplx a1, cplx a2, int samples = 20);

/// int_C pi^*(dx/y_G ^ conj) and int_G dx/y_G ^ conj (i/2 convention).
std::pair<QuadratureResult, QuadratureResult> cover_masses(const Genus3Cover& cover, const QuadratureOptions& options);

}  // namespace hyperchow::numerics
