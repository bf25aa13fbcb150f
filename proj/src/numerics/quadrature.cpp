#include "hyperchow/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hyperchow::numerics {

double Place::log_abs_minus(cplx e) const {
  if (at_infinity) return std::log(std::abs(1.0 - e * offset)) - std::log(std::abs(offset));
  return std::log(std::abs((center - e) + offset));
}

double Place::log_abs_x() const {
  if (at_infinity) return -std::log(std::abs(offset));
  return std::log(std::abs(center + offset));
}

QuadratureResult VectorQuadratureResult::component(std::size_t k) const {
  QuadratureResult r;
  r.value = values.at(k);
  r.error_estimate = errors.at(k);
  r.cells_used = cells_used;
  r.tolerance_requested = tolerance_requested;
  r.converged = converged;
  return r;
}

std::vector<cplx> merge_points(const std::vector<cplx>& points) {
  std::vector<cplx> out;
  for (const cplx& p : points) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw std::invalid_argument("non-finite singular point");
    bool seen = false;
    for (const cplx& q : out)
      if (std::abs(p - q) <= 1e-9 * (1.0 + std::abs(q))) seen = true;
    if (!seen) out.push_back(p);
  }
  return out;
}

namespace {

// Kronrod 15 nodes on [-1, 1], symmetric; Gauss 7 nodes are the odd slots.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Rule {
  std::array<double, 15> node{}, wk{}, wg{};
  Rule() {
    for (int i = 0; i < 7; ++i) {
      node[i] = -kXgk[i];
      node[14 - i] = kXgk[i];
      wk[i] = wk[14 - i] = kWgk[i];
      if (i % 2 == 1) wg[i] = wg[14 - i] = kWg[i / 2];
    }
    node[7] = 0.0;
    wk[7] = kWgk[7];
    wg[7] = kWg[3];
  }
};

const Rule& rule() {
  static const Rule r;
  return r;
}

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t), b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

enum class Chart : std::uint8_t { box, disk, exterior };

struct Cell {
  Chart chart = Chart::box;
  int center = -1;
  double a0 = 0, a1 = 0, b0 = 0, b1 = 0;
};

struct Layout {
  std::vector<cplx> centers;
  double radius = 0;  // disk radius
  double outer = 0;   // chi_inf ramps from outer to 2 outer

  double disk_weight(double r) const { return 1.0 - smooth_step((r - 0.5 * radius) / (0.5 * radius)); }
  double exterior_weight(double modulus) const { return smooth_step((modulus - outer) / outer); }
  double box_weight(cplx x) const {
    for (const cplx& c : centers) {
      const double r = std::abs(x - c);
      if (r < radius) return 1.0 - disk_weight(r);
    }
    return 1.0 - exterior_weight(std::abs(x));
  }
};

class Engine {
 public:
  Engine(const PlaneIntegrand& f, const QuadratureOptions& o) : f_(f), opt_(o), n_(f.components) {
    if (n_ == 0) throw std::invalid_argument("integrand without components");
    if (!(o.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (o.max_cells == 0) throw std::invalid_argument("cell budget must be positive");
    layout_.centers = merge_points(f.singular_points);
    double gap = std::numeric_limits<double>::infinity();
    double far = 0.0;
    for (std::size_t i = 0; i < layout_.centers.size(); ++i) {
      far = std::max(far, std::abs(layout_.centers[i]));
      for (std::size_t j = 0; j < i; ++j) gap = std::min(gap, std::abs(layout_.centers[i] - layout_.centers[j]));
    }
    if (!std::isfinite(gap)) gap = 1.0 + far;
    layout_.radius = o.disk_factor * gap;
    layout_.outer = 1.5 * std::max(1.0, far + layout_.radius);
  }

  VectorQuadratureResult run() {
    seed_cells();
    value_.assign(cells_.size() * n_, 0.0);
    error_.assign(cells_.size() * n_, 0.0);
    abs_.assign(cells_.size() * n_, 0.0);
    evaluate_range(0, cells_.size());

    VectorQuadratureResult out;
    out.tolerance_requested = opt_.tol;
    while (true) {
      totals(out);
      std::vector<double> target(n_);
      bool done = true;
      for (std::size_t c = 0; c < n_; ++c) {
        target[c] = opt_.tol * out.l1[c];
        if (out.errors[c] > target[c]) done = false;
      }
      if (done) {
        out.converged = true;
        break;
      }
      if (cells_.size() + 3 > opt_.max_cells) break;
      const std::vector<std::size_t> pick = select(target, (opt_.max_cells - cells_.size()) / 3);
      if (pick.empty()) break;
      split(pick);
    }
    out.cells_used = cells_.size();
    return out;
  }

 private:
  void seed_cells() {
    const double pi = std::acos(-1.0);
    auto rings = [&](Chart chart, int center, double outer_r) {
      std::vector<double> radii{outer_r, 0.5 * outer_r};
      for (int m = 0; m < opt_.grading_levels; ++m) radii.push_back(radii.back() * opt_.grading);
      radii.push_back(0.0);
      for (std::size_t k = 0; k + 1 < radii.size(); ++k)
        for (int s = 0; s < 4; ++s)
          cells_.push_back({chart, center, radii[k + 1], radii[k], 0.5 * pi * s, 0.5 * pi * (s + 1)});
    };
    for (std::size_t k = 0; k < layout_.centers.size(); ++k) rings(Chart::disk, static_cast<int>(k), layout_.radius);
    rings(Chart::exterior, -1, 1.0 / layout_.outer);
    const double b = 2.0 * layout_.outer;
    const int grid = 8;
    const double step = 2.0 * b / grid;
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j)
        cells_.push_back({Chart::box, -1, -b + i * step, -b + (i + 1) * step, -b + j * step, -b + (j + 1) * step});
  }

  // Weighted density at a node; returns false when the weight vanishes.
  bool sample(const Cell& cell, double a, double b, double* out) const {
    Place p;
    double factor = 1.0;
    switch (cell.chart) {
      case Chart::box: {
        const cplx x(a, b);
        factor = layout_.box_weight(x);
        if (factor == 0.0) return false;
        p.offset = x;
        break;
      }
      case Chart::disk: {
        factor = a * layout_.disk_weight(a);
        if (factor == 0.0) return false;
        p.center = layout_.centers[cell.center];
        p.offset = std::polar(a, b);
        break;
      }
      case Chart::exterior: {
        factor = layout_.exterior_weight(1.0 / a);
        if (factor == 0.0) return false;
        factor /= a * a * a;
        p.at_infinity = true;
        p.offset = std::polar(a, b);
        break;
      }
    }
    f_.density(p, out);
    for (std::size_t c = 0; c < n_; ++c) {
      if (!std::isfinite(out[c])) throw std::runtime_error("integrand is not finite at a quadrature node");
      out[c] *= factor;
    }
    return true;
  }

  void evaluate_cell(std::size_t idx) {
    const Cell& cell = cells_[idx];
    const Rule& r = rule();
    const double ha = 0.5 * (cell.a1 - cell.a0), ma = 0.5 * (cell.a1 + cell.a0);
    const double hb = 0.5 * (cell.b1 - cell.b0), mb = 0.5 * (cell.b1 + cell.b0);
    std::vector<double> k(n_, 0.0), g(n_, 0.0), ab(n_, 0.0), buf(n_);
    for (int i = 0; i < 15; ++i) {
      const double a = ma + ha * r.node[i];
      for (int j = 0; j < 15; ++j) {
        const double b = mb + hb * r.node[j];
        if (!sample(cell, a, b, buf.data())) continue;
        const double wk = r.wk[i] * r.wk[j], wg = r.wg[i] * r.wg[j];
        for (std::size_t c = 0; c < n_; ++c) {
          k[c] += wk * buf[c];
          g[c] += wg * buf[c];
          ab[c] += wk * std::abs(buf[c]);
        }
      }
    }
    const double area = ha * hb;
    for (std::size_t c = 0; c < n_; ++c) {
      value_[idx * n_ + c] = k[c] * area;
      error_[idx * n_ + c] = std::abs(k[c] - g[c]) * area;
      abs_[idx * n_ + c] = ab[c] * area;
    }
  }

  void evaluate_range(std::size_t first, std::size_t last) {
    const long long lo = static_cast<long long>(first), hi = static_cast<long long>(last);
#pragma omp parallel for schedule(dynamic, 4) if (opt_.parallel)
    for (long long i = lo; i < hi; ++i) evaluate_cell(static_cast<std::size_t>(i));
  }

  // Neumaier sums in cell order.
  void totals(VectorQuadratureResult& out) const {
    out.values.assign(n_, 0.0);
    out.errors.assign(n_, 0.0);
    out.l1.assign(n_, 0.0);
    for (std::size_t c = 0; c < n_; ++c) {
      double s = 0, comp = 0, e = 0, a = 0;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        const double v = value_[i * n_ + c];
        const double t = s + v;
        comp += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
        s = t;
        e += error_[i * n_ + c];
        a += abs_[i * n_ + c];
      }
      out.values[c] = s + comp;
      out.errors[c] = e;
      out.l1[c] = a;
    }
  }

  std::vector<std::size_t> select(const std::vector<double>& target, std::size_t limit) const {
    std::vector<double> score(cells_.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      double s = 0.0;
      for (std::size_t c = 0; c < n_; ++c)
        if (target[c] > 0.0) s = std::max(s, error_[i * n_ + c] / target[c]);
      score[i] = s;
      total += s;
    }
    std::vector<std::size_t> order(cells_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
    std::vector<std::size_t> pick;
    double acc = 0.0;
    for (std::size_t i : order) {
      if (pick.size() >= limit || score[i] <= 0.0 || acc >= 0.5 * total) break;
      pick.push_back(i);
      acc += score[i];
    }
    std::sort(pick.begin(), pick.end());
    return pick;
  }

  void split(const std::vector<std::size_t>& pick) {
    const std::size_t first_new = cells_.size();
    for (std::size_t idx : pick) {
      const Cell c = cells_[idx];
      const double am = 0.5 * (c.a0 + c.a1), bm = 0.5 * (c.b0 + c.b1);
      cells_[idx] = {c.chart, c.center, c.a0, am, c.b0, bm};
      cells_.push_back({c.chart, c.center, am, c.a1, c.b0, bm});
      cells_.push_back({c.chart, c.center, c.a0, am, bm, c.b1});
      cells_.push_back({c.chart, c.center, am, c.a1, bm, c.b1});
    }
    value_.resize(cells_.size() * n_);
    error_.resize(cells_.size() * n_);
    abs_.resize(cells_.size() * n_);
    std::vector<std::size_t> work(pick);
    for (std::size_t i = first_new; i < cells_.size(); ++i) work.push_back(i);
    const long long m = static_cast<long long>(work.size());
#pragma omp parallel for schedule(dynamic, 4) if (opt_.parallel)
    for (long long i = 0; i < m; ++i) evaluate_cell(work[static_cast<std::size_t>(i)]);
  }

  const PlaneIntegrand& f_;
  QuadratureOptions opt_;
  std::size_t n_;
  Layout layout_;
  std::vector<Cell> cells_;
  std::vector<double> value_, error_, abs_;
};

}  // namespace

VectorQuadratureResult integrate_plane(const PlaneIntegrand& integrand, const QuadratureOptions& options) {
  if (!integrand.density) throw std::invalid_argument("integrand without density");
  return Engine(integrand, options).run();
}

}  // namespace hyperchow::numerics
