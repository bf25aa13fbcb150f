#include "hyperchow/numerics/covers.hpp"
#include "hyperchow/numerics/periods.hpp"
#include "hyperchow/numerics/regulator.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hyperchow;
using namespace hyperchow::numerics;

namespace {

QuadratureOptions options(double tol = 1e-8) {
  QuadratureOptions o;
  o.tol = tol;
  return o;
}

double slack(const QuadratureResult& r) { return std::max(r.tolerance_requested, 3.0 * r.error_estimate); }

const double kEulerGamma = 0.57721566490153286061;

}  // namespace

TEST(Quadrature, GaussianAndLogarithmicMoments) {
  PlaneIntegrand f;
  f.components = 2;
  f.singular_points = {0.0, cplx(1.0, 1.0)};
  f.density = [](const Place& p, double* out) {
    const cplx x = p.x();
    const double g = std::exp(-std::norm(x));
    out[0] = g;
    out[1] = g * p.log_abs_x();
  };
  const double pi = std::acos(-1.0);
  const auto r = integrate_plane(f, options(1e-10));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.values[0], pi, 1e-9);
  EXPECT_NEAR(r.values[1], -0.5 * pi * kEulerGamma, 1e-9);
}

TEST(Quadrature, SerialAndParallelAgreeBitForBit) {
  const auto c = ComplexCurveModel::legendre(cplx(2.0, 1.0));
  QuadratureOptions a = options(), b = options();
  a.parallel = false;
  b.parallel = true;
  const CurveIntegrand part{VolumeForm::monomial(1, 0, 0), CurveFunction::rational(1.0, {{0.0, 1}})};
  const auto ra = integrate_curve(c, part, a), rb = integrate_curve(c, part, b);
  EXPECT_EQ(ra.value, rb.value);
  EXPECT_EQ(ra.error_estimate, rb.error_estimate);
  EXPECT_EQ(ra.cells_used, rb.cells_used);
}

TEST(Quadrature, BudgetExhaustionIsFlagged) {
  QuadratureOptions o = options(1e-14);
  o.max_cells = 2000;
  const auto r = integrate_curve(ComplexCurveModel::legendre(2.0), CurveIntegrand{VolumeForm::monomial(1, 0, 0), {}}, o);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.cells_used, 2000u);
}

TEST(Quadrature, RejectsBadOptions) {
  QuadratureOptions o = options(0.0);
  PlaneIntegrand f;
  f.density = [](const Place&, double* out) { out[0] = 0.0; };
  EXPECT_THROW(integrate_plane(f, o), std::invalid_argument);
}

TEST(CurveModel, SheetsSatisfyTheEquation) {
  const auto c = ComplexCurveModel::from_polynomial(Polynomial{0, 24, -50, 35, -10, 1});
  EXPECT_EQ(c.genus(), 2);
  for (int k = 0; k < 50; ++k) {
    const cplx x(std::cos(k * 0.7) * (1 + k % 5), std::sin(k * 1.3) * (1 + k % 3));
    const cplx y = c.sqrt_h(x);
    EXPECT_LT(c.residual(x, y), 1e-13);
    EXPECT_LT(c.residual(x, -y), 1e-13);
  }
}

TEST(CurveModel, ZeroFormIntegratesToZero) {
  VolumeForm zero;
  zero.coefficients = Eigen::MatrixXcd::Zero(1, 1);
  const auto r = integrate_curve(ComplexCurveModel::legendre(3.0),
                                 CurveIntegrand{zero, CurveFunction::rational(1.0, {{0.0, 1}})}, options());
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.converged);
}

TEST(CurveModel, SheetConventionDoesNotMatter) {
  // f = x + y depends on the sheet; only |.|-even combinations are integrated
  const HyperellipticCurve curve(Polynomial{0, 24, -50, 35, -10, 1});
  const auto c = ComplexCurveModel::from_polynomial(curve.h());
  const FunctionFieldElement f(curve, Polynomial{0, 1}, Polynomial::constant(1));
  const CurveIntegrand part{VolumeForm::monomial(2, 0, 0), CurveFunction::from_element(f)};
  const auto plus = integrate_curve(c, part, options(), 1.0);
  const auto minus = integrate_curve(c, part, options(), -1.0);
  EXPECT_EQ(plus.value, minus.value);
  // log|x + y| + log|x - y| = log|x^2 - h|
  const auto [num, den] = f.norm();
  const auto normed = integrate_curve(c, CurveIntegrand{VolumeForm::monomial(2, 0, 0),
                                                        CurveFunction::from_element(FunctionFieldElement(curve, num, Polynomial()))},
                                      options());
  EXPECT_NEAR(plus.value, 0.5 * normed.value, 1e-7 * std::abs(normed.value) + 3 * normed.error_estimate);
}

TEST(Periods, RectangularLatticeAtOneHalf) {
  const auto p = elliptic_periods(0.5);
  EXPECT_NEAR(p.omega1.imag(), 0.0, 1e-12 * std::abs(p.omega1));
  EXPECT_NEAR(p.omega2.real(), 0.0, 1e-12 * std::abs(p.omega2));
}

TEST(Periods, InversionScalesCovolume) {
  // x -> lambda x identifies E(1/lambda) with E(lambda), dx/y picking up |lambda|^(1/2)
  for (cplx l : {cplx(2.0), cplx(3.0), cplx(5.0), cplx(1.5), cplx(2.0, 1.0)}) {
    const double a = elliptic_periods(l).covolume, b = elliptic_periods(1.0 / l).covolume;
    EXPECT_NEAR(b, std::abs(l) * a, 1e-12 * b);
  }
}

TEST(Periods, ExtendedPrecisionAgrees) {
  for (cplx l : {cplx(2.0), cplx(0.5, 3.0), cplx(-3.0, 0.2)}) {
    const double a = elliptic_periods(l, Precision::standard).covolume;
    const double b = elliptic_periods(l, Precision::extended).covolume;
    EXPECT_NEAR(a, b, 1e-13 * a);
  }
}

TEST(Periods, DegenerateLambdaThrows) {
  EXPECT_THROW(elliptic_periods(0.0), std::domain_error);
  EXPECT_THROW(elliptic_periods(1.0), std::domain_error);
  EXPECT_THROW(I_of_lambda(1.0, options()), std::domain_error);
}

TEST(Periods, WeierstrassParametrizationHitsBranchPoints) {
  for (cplx l : {cplx(2.0), cplx(2.0, 1.0), cplx(0.5, 3.0)}) {
    const auto p = elliptic_periods(l);
    std::vector<cplx> hits;
    for (cplx z : {0.25 * p.omega1, 0.25 * p.omega2, 0.25 * (p.omega1 + p.omega2)}) hits.push_back(legendre_x(z, l, p));
    for (cplx e : {cplx(0.0), cplx(1.0), l}) {
      double best = 1e300;
      for (cplx h : hits) best = std::min(best, std::abs(h - e));
      EXPECT_LT(best, 1e-10);
    }
    // dx/dz = 2y, fourth-order central difference
    const cplx z0 = 0.13 * p.omega1 + 0.21 * p.omega2, step(1e-3, 0.0);
    auto x_at = [&](cplx z) { return legendre_x(z, l, p); };
    const cplx dx = (8.0 * (x_at(z0 + step) - x_at(z0 - step)) - (x_at(z0 + 2.0 * step) - x_at(z0 - 2.0 * step))) /
                    (12.0 * step);
    const cplx x = legendre_x(z0, l, p);
    EXPECT_NEAR(std::abs(dx * dx - 4.0 * x * (x - 1.0) * (x - l)) / std::abs(dx * dx), 0.0, 1e-8);
  }
}

TEST(Periods, CovolumeMatchesQuadratureMass) {
  for (cplx l : {cplx(2.0), cplx(3.0), cplx(5.0), cplx(1.5), cplx(2.0, 1.0)}) {
    const auto m = lambda_integrals(l, options(1e-9)).mass;
    const double covol = elliptic_periods(l).covolume;
    EXPECT_TRUE(m.converged);
    EXPECT_LE(std::abs(m.value - covol) / covol, 1e-8) << l;
  }
}

TEST(ILambda, FunctionalEquation) {
  for (cplx l : {cplx(2.0), cplx(3.0), cplx(5.0), cplx(1.5), cplx(2.0, 1.0)}) {
    const auto a = I_of_lambda(l, options()), b = I_of_lambda(1.0 / l, options());
    EXPECT_TRUE(a.converged && b.converged);
    const double residual = std::abs(a.value - b.value - std::log(std::abs(l)));
    EXPECT_LE(residual, std::max(1e-8, 3.0 * (a.error_estimate + b.error_estimate))) << l;
    EXPECT_LE(residual, 1e-6);
  }
}

TEST(ILambda, ConjugationSymmetryAndNonConstancy) {
  const auto a = I_of_lambda(cplx(2.0, 1.0), options()), b = I_of_lambda(cplx(2.0, -1.0), options());
  EXPECT_NEAR(a.value, b.value, slack(a) + slack(b));
  const auto two = I_of_lambda(2.0, options()), half = I_of_lambda(0.5, options());
  EXPECT_GT(std::abs(two.value - half.value), 5.0 * (two.error_estimate + half.error_estimate));
}

TEST(ILambda, HalfLogModulus) {
  // x -> lambda / x permutes the branch points, so log|x| + log|lambda / x| averages to 2 I
  for (cplx l : {cplx(2.0), cplx(7.0), cplx(0.5, 3.0), cplx(-3.0, 0.2)}) {
    const auto r = I_of_lambda(l, options());
    EXPECT_NEAR(r.value, 0.5 * std::log(std::abs(l)), slack(r)) << l;
  }
}

TEST(ILambda, MonteCarloOracleAgrees) {
  for (cplx l : {cplx(2.0), cplx(5.0), cplx(2.0, 1.0)}) {
    const auto q = I_of_lambda(l, options());
    const auto mc = monte_carlo_I(l, 400000, 1234);
    EXPECT_LE(std::abs(mc.mean - q.value), 3.0 * mc.standard_error) << l;
  }
}

TEST(Gram, GenusOneIsCovolumeScaling) {
  const auto c = ComplexCurveModel::legendre(3.0);
  const auto g = gram_normalize(c, options());
  const double covol = elliptic_periods(3.0).covolume;
  EXPECT_NEAR(std::norm(g.transform(0, 0)) * covol, 1.0, 1e-8);
}

TEST(Gram, SelfConsistencyGenusTwoAndThree) {
  for (const Polynomial& h : {Polynomial{0, 24, -50, 35, -10, 1}, Polynomial{1, 0, 0, 0, 0, 0, 0, 1},
                              Polynomial{-1, 3, 0, 1, -2, 0, 1}}) {
    const auto c = ComplexCurveModel::from_polynomial(h);
    const double tol = 1e-8;
    const auto g = gram_normalize(c, options(tol));
    EXPECT_TRUE(g.converged);
    EXPECT_TRUE((g.gram - g.gram.adjoint()).norm() < 1e-12 * g.gram.norm());
    EXPECT_LE(orthonormality_defect(c, g, options(tol)), 10.0 * tol) << to_string(h);
    // theta built from the orthonormal basis has unit mass
    const auto mass = integrate_curve(c, CurveIntegrand{theta_form(g), {}}, options(tol));
    EXPECT_NEAR(mass.value, 1.0, 10.0 * tol);
  }
}

TEST(Gram, BiellipticPullbacksAreOrthogonal) {
  const auto d = build_bielliptic(2.0, 3.0);
  const auto g = gram_normalize(d.curve, options(), d.elliptic_rows);
  const Eigen::MatrixXcd nu = d.elliptic_rows * g.gram * d.elliptic_rows.adjoint();
  EXPECT_LT(std::abs(nu(0, 1)), 1e-7 * std::sqrt(std::abs(nu(0, 0) * nu(1, 1))));
}

TEST(Bielliptic, Construction) {
  const auto d = build_bielliptic(2.0, 3.0);
  EXPECT_EQ(d.curve.genus(), 2);
  EXPECT_LT(d.curve_residual, 1e-10);
  EXPECT_LT(d.commutativity_residual, 1e-10);
  EXPECT_LT(d.c_spread, 1e-10);
  EXPECT_GT(std::abs(d.c), 0.0);
  EXPECT_EQ(d.g.degree_on_curve(), 4);
  EXPECT_EQ(d.f.degree_on_curve(), 2);
  const QuadraticMap& h = d.h;
  EXPECT_LT(std::abs(h(0.0)), 1e-12);
  EXPECT_LT(std::abs(h(1.0) - 1.0), 1e-12);
  EXPECT_LT(std::abs(h(h.c1()) - 2.0), 1e-12);
  EXPECT_LT(std::abs(h.derivative(h.c2())), 1e-12);
  for (cplx s : {cplx(0.3, 0.2), cplx(-4.0, 1.0)}) EXPECT_LT(std::abs(h(h.sigma(s)) - h(s)), 1e-10);
  EXPECT_THROW(build_bielliptic(2.0, 2.0), std::domain_error);
  EXPECT_THROW(build_bielliptic(1.0, 3.0), std::domain_error);
}

TEST(Bielliptic, SplittingIdentityAndVerdict) {
  int nonzero = 0;
  for (auto [l1, l2] : {std::pair{2.0, 3.0}, std::pair{2.0, 5.0}, std::pair{3.0, 5.0}}) {
    const auto r = bielliptic_identity_check(l1, l2, options());
    EXPECT_TRUE(r.converged);
    EXPECT_LE(std::abs(r.splitting_residual), 1e-5);
    EXPECT_LE(std::abs(r.mass_difference), 1e-6);
    for (int i = 0; i < 2; ++i) EXPECT_NEAR(r.masses[i].value, 2.0, 1e-7);
    // the measured constant is deg k_i = 2
    EXPECT_NEAR(r.degree_factor[0], 2.0, 1e-6);
    EXPECT_NEAR(r.difference_factor, 2.0, 1e-6);
    if (r.tau_value.status == "nonzero") ++nonzero;
  }
  EXPECT_GE(nonzero, 1);
}

TEST(Pairing, MatchesBiellipticPathAndIsAntisymmetric) {
  const auto r = bielliptic_identity_check(2.0, 5.0, options());
  const auto g = gram_normalize(r.data.curve, options(), r.data.elliptic_rows);
  const auto k = regulator_pairing_K(r.data.curve, r.data.f, g, options());
  EXPECT_NEAR(k.value, 2.0 * r.tau_value.value, slack(k) + 6.0 * r.tau_value.error + 1e-7);
  const auto swapped = regulator_pairing_K(r.data.curve, r.data.f, swap_basis(g, 0, 1), options());
  EXPECT_NEAR(swapped.value, -k.value, 1e-12 * std::abs(k.value) + 1e-12);
}

TEST(Pairing, ExactCurveEntryPoint) {
  const HyperellipticCurve curve(Polynomial{0, 24, -50, 35, -10, 1});
  const auto r = regulator_pairing_K(curve, CurvePoint::infinity(), CurvePoint::branch(0), options());
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_THROW(regulator_pairing_K(HyperellipticCurve(Polynomial{0, -1, 0, 1}), CurvePoint::infinity(),
                                   CurvePoint::branch(0), options()),
               std::invalid_argument);
}

TEST(Genus3Cover, DiagramAndMasses) {
  const auto c = build_genus3_cover(3.0, cplx(-2.0, 0.5), cplx(4.0, 1.0));
  EXPECT_EQ(c.genus_cover, 3);
  EXPECT_EQ(c.genus_base, 2);
  EXPECT_EQ(c.ramification, 0);
  EXPECT_LT(c.commutativity_residual, 1e-10);
  EXPECT_LT(c.branch_residual, 1e-10);
  EXPECT_LT(c.pullback_ratio_spread, 1e-6);
  const auto [up, down] = cover_masses(c, options());
  EXPECT_NEAR(up.value, 2.0 * down.value, 1e-8 * up.value);
  EXPECT_THROW(build_genus3_cover(3.0, 3.0, 4.0), std::domain_error);
}
