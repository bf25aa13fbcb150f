#include "hyperchow/numerics/curve_model.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperchow::numerics {

namespace {

cplx horner(const std::vector<cplx>& coeffs, cplx x) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<cplx> to_complex(const Polynomial& p) {
  std::vector<cplx> out;
  for (const Rational& c : p.coefficients()) out.emplace_back(c.get_d(), 0.0);
  return out;
}

std::vector<std::pair<cplx, int>> grouped_roots(const Polynomial& p, int sign) {
  std::vector<std::pair<cplx, int>> out;
  for (const cplx& r : numeric_roots(p)) {
    bool merged = false;
    for (auto& [z, m] : out)
      if (z == r) {
        m += sign;
        merged = true;
      }
    if (!merged) out.emplace_back(r, sign);
  }
  return out;
}

}  // namespace

ComplexCurveModel::ComplexCurveModel(cplx lead, std::vector<cplx> roots) : lead_(lead), roots_(std::move(roots)) {
  if (roots_.size() < 3) throw std::invalid_argument("curve model needs at least three branch points");
  if (lead_ == 0.0) throw std::invalid_argument("zero leading coefficient");
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(roots_[i] - roots_[j]) <= 1e-12 * (1.0 + std::abs(roots_[i])))
        throw std::invalid_argument("repeated branch point");
}

ComplexCurveModel ComplexCurveModel::from_polynomial(const Polynomial& h) {
  return ComplexCurveModel(cplx(h.leading().get_d(), 0.0), numeric_roots(h));
}

ComplexCurveModel ComplexCurveModel::legendre(cplx lambda) {
  if (lambda == 0.0 || lambda == 1.0) throw std::domain_error("lambda on the degenerate set {0, 1}");
  return ComplexCurveModel(1.0, {0.0, 1.0, lambda});
}

cplx ComplexCurveModel::h(cplx x) const {
  cplx acc = lead_;
  for (const cplx& e : roots_) acc *= x - e;
  return acc;
}

double ComplexCurveModel::log_abs_h(const Place& p) const {
  double acc = std::log(std::abs(lead_));
  for (const cplx& e : roots_) acc += p.log_abs_minus(e);
  return acc;
}

cplx ComplexCurveModel::sqrt_h(cplx x) const {
  cplx acc = std::sqrt(lead_);
  for (const cplx& e : roots_) acc *= std::sqrt(x - e);
  return acc;
}

double ComplexCurveModel::residual(cplx x, cplx y) const {
  const cplx hx = h(x);
  return std::abs(y * y - hx) / std::max(1.0, std::abs(hx));
}

VolumeForm VolumeForm::monomial(int genus, int j, int k) {
  VolumeForm v;
  v.coefficients = Eigen::MatrixXcd::Zero(genus, genus);
  v.coefficients(j, k) += 0.5;
  v.coefficients(k, j) += 0.5;
  return v;
}

VolumeForm VolumeForm::from_rows(const Eigen::MatrixXcd& rows, const std::vector<double>& signs) {
  if (static_cast<Eigen::Index>(signs.size()) != rows.rows()) throw std::invalid_argument("one sign per row");
  VolumeForm v;
  v.coefficients = Eigen::MatrixXcd::Zero(rows.cols(), rows.cols());
  for (Eigen::Index a = 0; a < rows.rows(); ++a)
    if (signs[a] != 0.0) v.coefficients += signs[a] * rows.row(a).transpose() * rows.row(a).conjugate();
  return v;
}

double VolumeForm::density(const ComplexCurveModel& c, const Place& p) const {
  const Eigen::Index g = coefficients.rows();
  const cplx x = p.x();
  // x^(j-1) for j = 1..g
  cplx pw[8];
  if (g > 8) throw std::invalid_argument("genus above 8 not supported");
  pw[0] = 1.0;
  for (Eigen::Index j = 1; j < g; ++j) pw[j] = pw[j - 1] * x;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < g; ++j)
    for (Eigen::Index k = 0; k < g; ++k) {
      const cplx m = coefficients(j, k);
      if (m != 0.0) acc += (m * pw[j] * std::conj(pw[k])).real();
    }
  if (acc == 0.0) return 0.0;
  return acc * std::exp(-c.log_abs_h(p));
}

bool VolumeForm::hermitian(double tol) const {
  return (coefficients - coefficients.adjoint()).norm() <= tol * (1.0 + coefficients.norm());
}

CurveFunction CurveFunction::rational(cplx lead, std::vector<std::pair<cplx, int>> divisor) {
  if (lead == 0.0) throw std::invalid_argument("zero function");
  CurveFunction f;
  f.lead_ = lead;
  f.divisor_ = std::move(divisor);
  return f;
}

CurveFunction CurveFunction::from_element(const FunctionFieldElement& f) {
  if (f.is_zero()) throw std::domain_error("log of the zero function");
  CurveFunction out;
  auto den = grouped_roots(f.d(), -1);
  if (f.b().is_zero()) {
    out.lead_ = cplx(f.a().leading().get_d() / f.d().leading().get_d(), 0.0);
    out.divisor_ = grouped_roots(f.a(), 1);
    out.divisor_.insert(out.divisor_.end(), den.begin(), den.end());
    return out;
  }
  out.lead_ = cplx(1.0 / f.d().leading().get_d(), 0.0);
  out.divisor_ = den;
  out.a_ = to_complex(f.a());
  out.b_ = to_complex(f.b());
  const Polynomial norm = f.a() * f.a() - f.b() * f.b() * f.curve().h();
  out.norm_lead_ = cplx(norm.leading().get_d(), 0.0);
  out.norm_roots_ = numeric_roots(norm);
  return out;
}

void CurveFunction::log_abs(const ComplexCurveModel& c, const Place& p, double sheet_sign, double out[2]) const {
  double base = std::log(std::abs(lead_));
  for (const auto& [z, m] : divisor_) base += m * p.log_abs_minus(z);
  out[0] = out[1] = base;
  if (b_.empty()) return;
  const cplx x = p.x();
  const cplx ax = horner(a_, x), bxy = horner(b_, x) * c.sqrt_h(x) * sheet_sign;
  const cplx plus = ax + bxy, minus = ax - bxy;
  double log_norm = std::log(std::abs(norm_lead_));
  for (const cplx& z : norm_roots_) log_norm += p.log_abs_minus(z);
  // the smaller of the two sheets is recovered from the norm to avoid cancellation
  if (std::abs(plus) >= std::abs(minus)) {
    const double lp = std::log(std::abs(plus));
    out[0] += lp;
    out[1] += log_norm - lp;
  } else {
    const double lm = std::log(std::abs(minus));
    out[1] += lm;
    out[0] += log_norm - lm;
  }
}

std::vector<cplx> CurveFunction::singular_points() const {
  std::vector<cplx> out;
  for (const auto& [z, m] : divisor_)
    if (m != 0) out.push_back(z);
  out.insert(out.end(), norm_roots_.begin(), norm_roots_.end());
  return out;
}

int CurveFunction::degree_on_curve() const {
  if (!b_.empty()) throw std::domain_error("degree needs a function of x alone");
  int zeros = 0, poles = 0;
  for (const auto& [z, m] : divisor_) (m > 0 ? zeros : poles) += std::abs(m);
  return 2 * std::max(zeros, poles);
}

cplx CurveFunction::value(cplx x, cplx y) const {
  cplx acc = lead_;
  for (const auto& [z, m] : divisor_) acc *= std::pow(x - z, m);
  if (!b_.empty()) acc *= horner(a_, x) + horner(b_, x) * y;
  return acc;
}

VectorQuadratureResult integrate_curve(const ComplexCurveModel& c, const std::vector<CurveIntegrand>& parts,
                                       const QuadratureOptions& options, double sheet_sign) {
  for (const auto& part : parts) {
    if (part.form.coefficients.rows() != c.genus() || part.form.coefficients.cols() != c.genus())
      throw std::invalid_argument("volume form size does not match the genus");
    if (!part.form.hermitian()) throw std::invalid_argument("volume form is not hermitian");
  }
  PlaneIntegrand f;
  f.components = parts.size();
  f.singular_points = c.roots();
  for (const auto& part : parts)
    if (part.log_factor) {
      const auto s = part.log_factor->singular_points();
      f.singular_points.insert(f.singular_points.end(), s.begin(), s.end());
    }
  f.density = [&c, &parts, sheet_sign](const Place& p, double* out) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const double d = parts[i].form.density(c, p);
      if (d == 0.0) {
        out[i] = 0.0;
        continue;
      }
      if (parts[i].log_factor) {
        double l[2];
        parts[i].log_factor->log_abs(c, p, sheet_sign, l);
        out[i] = d * (l[0] + l[1]);
      } else {
        out[i] = 2.0 * d;
      }
    }
  };
  return integrate_plane(f, options);
}

QuadratureResult integrate_curve(const ComplexCurveModel& c, const CurveIntegrand& part,
                                 const QuadratureOptions& options, double sheet_sign) {
  return integrate_curve(c, std::vector<CurveIntegrand>{part}, options, sheet_sign).component(0);
}

}  // namespace hyperchow::numerics
