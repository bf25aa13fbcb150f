#include "hyperchow/polynomial.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hyperchow {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p *= linear(r);
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial p = *this;
  const Rational lc = leading();
  for (auto& c : p.coeffs_) c /= lc;
  return p;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v / content);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational& lc = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const Polynomial& divisor, const Polynomial& p) { return (p % divisor).is_zero(); }

int compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    const int c = cmp(a.coeffs_[static_cast<std::size_t>(k)], b.coeffs_[static_cast<std::size_t>(k)]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = r2.is_zero() ? std::move(r2) : r2.primitive();
  }
  return r0.monic();
}

ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Polynomial{}, Polynomial{}, Polynomial{}};
  const Rational lc = r0.leading();
  const Rational inv = 1 / lc;
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  auto e = xgcd(a % m, m);
  if (!e.g.is_one()) throw std::domain_error("polynomial is not invertible modulo the given modulus");
  return e.s % m;
}

Polynomial pow(const Polynomial& p, int exponent) {
  if (exponent < 0) throw std::domain_error("negative polynomial power");
  Polynomial result = Polynomial::constant(1), base = p;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() <= 0) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(df, a);
  Polynomial d = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++k;
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return Polynomial::constant(1);
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

int root_order(const Polynomial& p, const Rational& x0) {
  if (p.is_zero()) throw std::domain_error("root order of the zero polynomial");
  int k = 0;
  Polynomial q = p;
  const Polynomial lin = Polynomial::linear(x0);
  while (q.degree() > 0 && q(x0) == 0) {
    q = exact_div(q, lin);
    ++k;
  }
  return k;
}

int divisor_order(const Polynomial& p, const Polynomial& m) {
  if (p.is_zero()) throw std::domain_error("divisor order of the zero polynomial");
  if (m.degree() <= 0) throw std::domain_error("divisor order needs a nonconstant modulus");
  int k = 0;
  Polynomial q = p;
  while (true) {
    auto [quot, rem] = divmod(q, m);
    if (!rem.is_zero()) break;
    q = std::move(quot);
    ++k;
  }
  return k;
}

namespace {

// Sign of an integer polynomial at (2m+1)/2, via 2^n p((2m+1)/2) in exact integers.
int sign_at_half(const std::vector<Integer>& coeffs, const Integer& m) {
  const Integer num = 2 * m + 1;
  Integer acc = 0, scale = 1;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * num + coeffs[k] * scale;
    scale *= 2;
  }
  // acc = sum c_k num^k 2^(n-k); positive factor dropped
  return sgn(acc);
}

std::vector<Integer> integer_coefficients(const Polynomial& p) {
  // positive rescaling only, so signs survive
  Integer common = 1, content = 0;
  for (int k = 0; k <= p.degree(); ++k) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.coeff(k).get_den_mpz_t());
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    Integer v = p.coeff(k).get_num() * (common / p.coeff(k).get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out[static_cast<std::size_t>(k)] = std::move(v);
  }
  for (auto& v : out) v /= content;
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  const Polynomial s = squarefree_part(p).primitive();
  const int n = s.degree();
  const Integer an = s.leading().get_num();
  // Rational roots of s are k/an for the integer roots k of the monic
  // integer polynomial S(z) = an^(n-1) s(z/an).
  std::vector<Rational> scoeffs(static_cast<std::size_t>(n) + 1);
  Integer bound = 1;
  for (int k = 0; k < n; ++k) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), an.get_mpz_t(), static_cast<unsigned long>(n - 1 - k));
    const Integer c = s.coeff(k).get_num() * power;
    scoeffs[static_cast<std::size_t>(k)] = Rational(c);
    // Fujiwara: |root| <= 2 max |c_k|^(1/(n-k))
    Integer r;
    const Integer ac = abs(c);
    mpz_root(r.get_mpz_t(), ac.get_mpz_t(), static_cast<unsigned long>(n - k));
    r += 1;
    if (r > bound) bound = r;
  }
  scoeffs[static_cast<std::size_t>(n)] = 1;
  const Polynomial big(std::move(scoeffs));
  bound = 2 * bound + 1;

  std::vector<std::vector<Integer>> sturm{integer_coefficients(big), integer_coefficients(big.derivative())};
  {
    Polynomial prev = big, cur = big.derivative();
    while (cur.degree() > 0) {
      Polynomial r = -(prev % cur);
      if (r.is_zero()) break;
      sturm.push_back(integer_coefficients(r));
      prev = std::move(cur);
      cur = std::move(r);
    }
  }
  auto variations_at = [&](const Integer& m) {
    int variations = 0, last = 0;
    for (const auto& q : sturm) {
      const int sg = sign_at_half(q, m);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++variations;
      last = sg;
    }
    return variations;
  };
  const std::vector<Integer>& top = sturm.front();
  auto check = [&](const Integer& k) {
    Integer acc = 0;
    for (std::size_t i = top.size(); i-- > 0;) acc = acc * k + top[i];
    if (acc == 0) {
      Rational r(k, an);
      r.canonicalize();
      roots.push_back(r);
    }
  };

  // Intervals (lo + 1/2, hi + 1/2); half-integers are never roots of a monic integer polynomial.
  struct Interval {
    Integer lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack;
  const Integer lo0 = -bound - 1, hi0 = bound;
  const int v0 = variations_at(lo0), v1 = variations_at(hi0);
  if (v0 > v1) stack.push_back({lo0, hi0, v0, v1});
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = iv.vlo - iv.vhi;
    if (count <= 0) continue;
    if (iv.hi - iv.lo == 1) {
      check(iv.hi);
      continue;
    }
    if (count == 1) {
      // single simple root: plain sign bisection on S
      Integer lo = iv.lo, hi = iv.hi;
      const int slo = sign_at_half(top, lo);
      while (hi - lo > 1) {
        Integer mid = lo + (hi - lo) / 2;
        if (sign_at_half(top, mid) == slo) lo = mid;
        else hi = mid;
      }
      check(hi);
      continue;
    }
    Integer mid = iv.lo + (iv.hi - iv.lo) / 2;
    const int vmid = variations_at(mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (n == 0) {
    Rational r = 1;
    for (int i = 0; i < m; ++i) r *= b.leading();
    return r;
  }
  if (m == 0) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a.leading();
    return r;
  }
  const Polynomial r = a % b;
  if (r.is_zero()) return 0;
  Rational factor = ((m * n) % 2 == 0) ? Rational(1) : Rational(-1);
  for (int i = 0; i < m - r.degree(); ++i) factor *= b.leading();
  return factor * resultant(b, r);
}

std::vector<std::complex<double>> numeric_roots(const Polynomial& p) {
  std::vector<std::complex<double>> out;
  if (p.degree() <= 0) return out;
  for (const auto& [full, mult] : squarefree_decomposition(p)) {
    std::vector<std::complex<double>> local;
    // rational roots exactly, the rest numerically
    Polynomial factor = full;
    for (const Rational& r : rational_roots(full)) {
      local.emplace_back(r.get_d(), 0.0);
      factor = exact_div(factor, Polynomial::linear(r));
    }
    const int d = factor.degree();
    if (d >= 1) {
      Eigen::VectorXd c(d + 1);
      for (int k = 0; k <= d; ++k) c[k] = factor.coeff(k).get_d();
      Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
      for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
        // One Newton polish step against the exact coefficients.
        std::complex<double> z = solver.roots()[i];
        const Polynomial df = factor.derivative();
        for (int it = 0; it < 3; ++it) {
          const std::complex<double> dv = df.evaluate(z);
          if (std::abs(dv) == 0.0) break;
          z -= factor.evaluate(z) / dv;
        }
        local.push_back(z);
      }
    }
    for (int m = 0; m < mult; ++m) out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

std::string to_string(const Polynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool show = (mag != 1) || k == 0;
    if (show) os << to_string(mag);
    if (k >= 1) {
      if (show) os << "*";
      os << variable;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hyperchow
