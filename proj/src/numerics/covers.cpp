#include "hyperchow/numerics/covers.hpp"

#include "hyperchow/numerics/regulator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hyperchow::numerics {

namespace {

bool near(cplx a, cplx b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b)); }

// Fixed sample points on the curve, away from the branch points.
std::vector<std::pair<cplx, cplx>> curve_samples(const ComplexCurveModel& c, int count) {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  std::vector<std::pair<cplx, cplx>> out;
  while (static_cast<int>(out.size()) < count) {
    const cplx s(box(rng), box(rng));
    bool ok = true;
    for (const cplx& e : c.roots()) ok = ok && std::abs(s - e) > 0.05;
    if (!ok) continue;
    const cplx y = c.sqrt_h(s);
    out.emplace_back(s, out.size() % 2 == 0 ? y : -y);
  }
  return out;
}

double point_residual(const ComplexCurveModel& c, cplx x, cplx y) { return c.residual(x, y); }

}  // namespace

QuadraticMap::QuadraticMap(cplx v1, cplx v2) : v1_(v1), v2_(v2) {
  for (cplx v : {v1, v2})
    if (near(v, 0.0) || near(v, 1.0)) throw std::domain_error("critical value in {0, 1}");
  if (near(v1, v2)) throw std::domain_error("equal critical values");
  const cplx rho = std::sqrt(v1 / v2);
  const cplx t = std::sqrt((v1 - 1.0) / (v2 - 1.0));
  if (near(t, rho)) throw std::domain_error("degenerate constraint system");
  c2_ = (t - 1.0) / (t - rho);
  c1_ = rho * c2_;
  if (near(c1_, c2_) || near(c1_, 0.0) || near(c2_, 0.0)) throw std::domain_error("degenerate critical points");
  const double check = std::abs((*this)(0.0)) + std::abs((*this)(1.0) - 1.0) + std::abs((*this)(c1_) - v1) +
                       std::abs((*this)(c2_) - v2);
  if (!(check <= 1e-9 * (1.0 + std::abs(v1) + std::abs(v2)))) throw std::domain_error("constraint residual too large");
}

cplx QuadraticMap::operator()(cplx s) const {
  const cplx a = s - c2_, b = s - c1_;
  return (v1_ * a * a - v2_ * b * b) / denominator(s);
}

cplx QuadraticMap::derivative(cplx s) const {
  const cplx d = denominator(s);
  return derivative_constant() * (s - c1_) * (s - c2_) / (d * d);
}

cplx QuadraticMap::sigma(cplx s) const { return ((c1_ + c2_) * s - 2.0 * c1_ * c2_) / (2.0 * s - c1_ - c2_); }

std::pair<cplx, cplx> QuadraticMap::preimages(cplx value) const {
  if (near(value, v1_)) return {c1_, c1_};
  const cplx m = std::sqrt((v2_ - value) / (v1_ - value));
  return {(c2_ - m * c1_) / (1.0 - m), (c2_ + m * c1_) / (1.0 + m)};
}

Verdict nonzero_verdict(double value, double error) {
  Verdict v;
  v.value = value;
  v.error = error;
  v.status = std::abs(value) > 5.0 * error ? "nonzero" : "indeterminate";
  return v;
}

BiellipticData build_bielliptic(cplx lambda1, cplx lambda2, int samples) {
  const QuadraticMap h(lambda1, lambda2);
  const cplx s0 = h.sigma(0.0), s1 = h.sigma(1.0), p = h.pole();
  BiellipticData d{h, ComplexCurveModel(1.0, {0.0, s0, 1.0, s1, p}), {lambda1, lambda2}};
  const cplx c1 = h.c1(), c2 = h.c2();
  d.y_scale = std::sqrt(2.0 * (c1 - c2) * std::pow(lambda1 - lambda2, 3));
  const cplx k = h.derivative_constant() / d.y_scale;
  d.elliptic_rows = Eigen::MatrixXcd(2, 2);
  d.elliptic_rows << -c2, 1.0, -c1, 1.0;
  for (int i = 0; i < 2; ++i) {
    d.periods[i] = elliptic_periods(d.lambda[i]);
    Eigen::MatrixXcd row = d.elliptic_rows.row(i) * (k / std::sqrt(d.periods[i].covolume));
    d.pulled_back[i] = VolumeForm::from_rows(row, {1.0});
  }
  d.f = CurveFunction::rational(1.0, {{0.0, 1}});
  d.fbar = CurveFunction::rational(0.5 * (c1 + c2), {{s0, 1}, {p, -1}});
  const cplx g_lead = (lambda1 - lambda2) / (2.0 * (c1 - c2));
  d.g = CurveFunction::rational(g_lead, {{0.0, 1}, {s0, 1}, {p, -1}});
  d.c = (c1 + c2) * (c1 - c2) / (lambda1 - lambda2);

  const std::array<ComplexCurveModel, 2> e = {ComplexCurveModel::legendre(lambda1),
                                              ComplexCurveModel::legendre(lambda2)};
  for (const auto& [s, y] : curve_samples(d.curve, samples)) {
    d.curve_residual = std::max(d.curve_residual, d.curve.residual(s, y));
    const cplx x = h(s), den = h.denominator(s);
    for (int i = 0; i < 2; ++i) {
      const cplx ci = i == 0 ? c1 : c2;
      const cplx yi = d.y_scale * y * (s - ci) / (den * den);
      d.commutativity_residual = std::max(d.commutativity_residual, point_residual(e[i], x, yi));
    }
    const cplx ratio = d.f.value(s, y) * d.fbar.value(s, y) / d.g.value(s, y);
    d.c_spread = std::max(d.c_spread, std::abs(ratio - d.c) / std::abs(d.c));
  }
  return d;
}

BiellipticReport bielliptic_identity_check(cplx lambda1, cplx lambda2, const QuadratureOptions& options) {
  BiellipticReport r{build_bielliptic(lambda1, lambda2)};
  const auto& d = r.data;
  std::vector<CurveIntegrand> parts = {{d.pulled_back[0], std::nullopt}, {d.pulled_back[1], std::nullopt}};
  for (const CurveFunction* fn : {&d.f, &d.fbar, &d.g})
    for (int i = 0; i < 2; ++i) parts.push_back({d.pulled_back[i], *fn});
  const auto q = integrate_curve(d.curve, parts, options);
  r.converged = q.converged;
  for (int i = 0; i < 2; ++i) r.masses[i] = q.component(i);
  for (int fn = 0; fn < 3; ++fn)
    for (int i = 0; i < 2; ++i) r.integrals[fn][i] = q.component(2 + 2 * fn + i);
  auto diff = [&](int fn) { return r.integrals[fn][0].value - r.integrals[fn][1].value; };
  auto diff_err = [&](int fn) { return r.integrals[fn][0].error_estimate + r.integrals[fn][1].error_estimate; };
  r.splitting_residual = diff(0) + diff(1) - diff(2);
  r.splitting_error = diff_err(0) + diff_err(1) + diff_err(2);
  r.mass_difference = r.masses[0].value - r.masses[1].value;
  r.mass_difference_error = r.masses[0].error_estimate + r.masses[1].error_estimate;
  for (int i = 0; i < 2; ++i) {
    r.lambda_values[i] = I_of_lambda(d.lambda[i], options).value;
    r.degree_factor[i] = r.integrals[2][i].value / r.lambda_values[i];
  }
  r.difference_factor = diff(2) / (r.lambda_values[0] - r.lambda_values[1]);
  r.tau_value = nonzero_verdict(0.5 * diff(0), 0.5 * diff_err(0));
  return r;
}

Genus3Cover build_genus3_cover(cplx lambda, cplx a1, cplx a2, int samples) {
  const std::vector<cplx> base_set = {0.0, 1.0, lambda, a1, a2};
  for (std::size_t i = 0; i < base_set.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (near(base_set[i], base_set[j])) throw std::domain_error("branch values must be distinct");
  const QuadraticMap h(a1, a2);
  const auto [l1, l2] = h.preimages(lambda);
  Genus3Cover g{h,
                lambda,
                ComplexCurveModel(1.0, {0.0, h.sigma(0.0), 1.0, h.sigma(1.0), h.pole(), l1, l2}),
                ComplexCurveModel(1.0, base_set),
                ComplexCurveModel::legendre(lambda)};
  const cplx c1 = h.c1(), c2 = h.c2();
  const cplx lead = 2.0 * (c1 - c2) * std::pow(a1 - a2, 3);
  g.pi_scale = std::sqrt(lead * (a1 - a2) * (a1 - a2));
  g.k_scale = std::sqrt(lead);
  g.genus_cover = g.curve.genus();
  g.genus_base = g.base.genus();
  g.ramification = (2 * g.genus_cover - 2) - 2 * (2 * g.genus_base - 2);
  g.f = CurveFunction::rational(1.0, {{0.0, 1}});
  g.g = CurveFunction::rational((a1 - a2) / (2.0 * (c1 - c2)), {{0.0, 1}, {h.sigma(0.0), 1}, {h.pole(), -1}});

  for (const cplx& e : g.curve.roots()) {
    if (near(e, h.pole())) continue;
    const cplx v = h(e);
    double best = std::abs(1.0 / v);
    for (const cplx& b : {cplx(0.0), cplx(1.0), lambda}) best = std::min(best, std::abs(v - b));
    g.branch_residual = std::max(g.branch_residual, best);
  }
  cplx first_ratio = 0.0;
  for (const auto& [s, y] : curve_samples(g.curve, samples)) {
    const cplx x = h(s), den = h.denominator(s);
    const cplx yg = g.pi_scale * y * (s - c1) * (s - c2) / (den * den * den);
    const cplx ye = g.k_scale * y / (den * den);
    g.commutativity_residual =
        std::max({g.commutativity_residual, point_residual(g.base, x, yg), point_residual(g.elliptic, x, ye)});
    // pi^*(dx / y_G) against (s - pole) ds / y, derivative by central differences
    const double step = 1e-4 * (1.0 + std::abs(s));
    const cplx dh = (h(s + step) - h(s - step)) / (2.0 * step) * 4.0 / 3.0 -
                    (h(s + 2.0 * step) - h(s - 2.0 * step)) / (4.0 * step) / 3.0;
    const cplx ratio = dh / yg * y / (s - h.pole());
    if (first_ratio == 0.0) first_ratio = ratio;
    g.pullback_ratio_spread = std::max(g.pullback_ratio_spread, std::abs(ratio - first_ratio) / std::abs(first_ratio));
  }
  return g;
}

std::pair<QuadratureResult, QuadratureResult> cover_masses(const Genus3Cover& cover, const QuadratureOptions& options) {
  const QuadraticMap& h = cover.h;
  const cplx kappa = h.derivative_constant() * 2.0 * (h.c1() - h.c2()) / cover.pi_scale;
  Eigen::MatrixXcd row(1, 3);
  row << -h.pole() * kappa, kappa, 0.0;
  const auto upstairs = integrate_curve(cover.curve, CurveIntegrand{VolumeForm::from_rows(row, {1.0}), std::nullopt}, options);
  const auto downstairs = integrate_curve(cover.base, CurveIntegrand{VolumeForm::monomial(2, 0, 0), std::nullopt}, options);
  return {upstairs, downstairs};
}

}  // namespace hyperchow::numerics
