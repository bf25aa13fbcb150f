#include "hyperchow/numerics/periods.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

namespace hyperchow::numerics {

Precision precision_from_environment() {
  const char* v = std::getenv("HYPERCHOW_PRECISION");
  return (v != nullptr && std::string(v) == "extended") ? Precision::extended : Precision::standard;
}

std::string to_string(Precision p) { return p == Precision::extended ? "extended" : "standard"; }

namespace {

template <typename T>
std::complex<T> agm_impl(std::complex<T> a, std::complex<T> b) {
  const T eps = 8 * std::numeric_limits<T>::epsilon();
  for (int it = 0; it < 200; ++it) {
    const std::complex<T> m = (a + b) / T(2);
    std::complex<T> g = std::sqrt(a * b);
    if (std::abs(m - g) > std::abs(m + g)) g = -g;
    a = m;
    b = g;
    if (std::abs(a - b) <= eps * std::abs(a)) break;
  }
  return a;
}

template <typename T>
std::array<cplx, 3> branch_periods(cplx lambda) {
  const T pi = std::acos(T(-1));
  const std::array<std::complex<T>, 3> e = {std::complex<T>(0), std::complex<T>(1),
                                            std::complex<T>(lambda.real(), lambda.imag())};
  std::array<cplx, 3> out;
  for (int i = 0; i < 3; ++i) {
    const auto& p = e[(i + 1) % 3];
    const auto& q = e[(i + 2) % 3];
    const std::complex<T> m = agm_impl<T>(std::sqrt(e[i] - p), std::sqrt(e[i] - q));
    const std::complex<T> w = T(2) * pi / m;
    out[i] = cplx(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  }
  return out;
}

double det(cplx a, cplx b) { return std::abs(std::imag(std::conj(a) * b)); }

double real_gcd(double a, double b) {
  if (a < b) std::swap(a, b);
  const double scale = a;
  while (b > 1e-9 * scale) {
    const double r = std::abs(a - std::round(a / b) * b);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

cplx agm(cplx a, cplx b, Precision precision) {
  if (precision == Precision::extended) {
    const auto r = agm_impl<long double>({a.real(), a.imag()}, {b.real(), b.imag()});
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
  }
  return agm_impl<double>(a, b);
}

EllipticPeriods elliptic_periods(cplx lambda, Precision precision) {
  if (lambda == 0.0 || lambda == 1.0) throw std::domain_error("lambda on the degenerate set {0, 1}");
  const auto w = precision == Precision::extended ? branch_periods<long double>(lambda)
                                                  : branch_periods<double>(lambda);
  // the three periods generate the lattice; its covolume is the gcd of the
  // pairwise determinants
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  double g = 0.0;
  for (auto [i, j] : pairs) {
    const double d = det(w[i], w[j]);
    if (d > 0.0) g = g == 0.0 ? d : real_gcd(g, d);
  }
  if (g == 0.0) throw std::domain_error("degenerate period lattice");
  cplx v1 = 0.0, v2 = 0.0;
  for (auto [i, j] : pairs)
    if (std::abs(det(w[i], w[j]) - g) <= 1e-8 * g) {
      v1 = w[i];
      v2 = w[j];
      break;
    }
  if (v1 == 0.0) throw std::runtime_error("no period pair spans the lattice");
  // Gauss reduction
  for (int it = 0; it < 100; ++it) {
    if (std::norm(v1) > std::norm(v2)) std::swap(v1, v2);
    const double mu = std::round(std::real(v2 * std::conj(v1)) / std::norm(v1));
    if (mu == 0.0) break;
    v2 -= mu * v1;
  }
  if (std::imag(v2 / v1) < 0) v2 = -v2;
  if (std::abs(v2.imag()) <= 1e-12 * std::abs(v2) && std::abs(v1.imag()) > 1e-12 * std::abs(v1)) {
    const cplx t = v1;
    v1 = v2;
    v2 = -t;
  }
  EllipticPeriods out;
  out.omega1 = v1;
  out.omega2 = v2;
  out.covolume = det(v1, v2);
  return out;
}

cplx weierstrass_p(cplx z, cplx p1, cplx p2) {
  const double pi = std::acos(-1.0);
  // reduce z to the parallelogram centered at 0
  const double a = p1.real(), b = p2.real(), c = p1.imag(), d = p2.imag();
  const double det = a * d - b * c;
  double s = (d * z.real() - b * z.imag()) / det;
  double t = (-c * z.real() + a * z.imag()) / det;
  s -= std::round(s);
  t -= std::round(t);
  const cplx zr = s * p1 + t * p2;
  const cplx tau = p2 / p1;
  const cplx q = std::exp(cplx(0.0, pi) * tau);
  const cplx u = pi * zr / p1;
  const cplx sn = std::sin(u);
  cplx sum = 1.0 / (sn * sn) - 1.0 / 3.0;
  cplx q2n = 1.0;
  for (int n = 1; n < 400; ++n) {
    q2n *= q * q;
    const cplx term = 8.0 * double(n) * q2n / (1.0 - q2n) * (1.0 - std::cos(2.0 * n * u));
    sum += term;
    // bound rather than the term itself: the cosine factor can vanish
    const double growth = 1.0 + std::exp(2.0 * n * std::abs(u.imag()));
    if (8.0 * n * std::abs(q2n) * growth <= 1e-18 * std::abs(1.0 - q2n) * std::abs(sum)) break;
  }
  return (pi / p1) * (pi / p1) * sum;
}

cplx legendre_x(cplx z, cplx lambda, const EllipticPeriods& periods) {
  return weierstrass_p(z, 0.5 * periods.omega1, 0.5 * periods.omega2) + (1.0 + lambda) / 3.0;
}

MonteCarloResult monte_carlo_I(cplx lambda, std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  const EllipticPeriods per = elliptic_periods(lambda);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t n = 1; n <= samples; ++n) {
    const double s = unit(rng), t = unit(rng);
    const cplx z = 0.5 * (s * per.omega1 + t * per.omega2);
    const double v = std::log(std::abs(legendre_x(z, lambda, per)));
    const double delta = v - mean;
    mean += delta / double(n);
    m2 += delta * (v - mean);
  }
  MonteCarloResult r;
  r.mean = mean;
  r.samples = samples;
  r.standard_error = std::sqrt(m2 / double(samples - 1) / double(samples));
  return r;
}

}  // namespace hyperchow::numerics
