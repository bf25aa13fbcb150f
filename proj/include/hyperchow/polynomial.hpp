#pragma once

#include "hyperchow/rational.hpp"

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hyperchow {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// x - root
  static Polynomial linear(const Rational& root);
  /// prod (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;

  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Composition this(inner(x)).
  Polynomial compose(const Polynomial& inner) const;
  /// Integer-coefficient primitive polynomial with positive leading coefficient.
  Polynomial primitive() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  /// Euclidean quotient and remainder; throws on division by zero.
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Total order (degree, then coefficients from the top); used for map keys.
  friend int compare(const Polynomial& a, const Polynomial& b);
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return compare(a, b) < 0; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& divisor, const Polynomial& p);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g;  // monic
  Polynomial s;
  Polynomial t;  // s*a + t*b = g
};
ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

Polynomial pow(const Polynomial& p, int exponent);

/// Yun's algorithm: p = lc * prod_k factors[k].first ^ factors[k].second with
/// monic, squarefree, pairwise coprime factors.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);
bool is_squarefree(const Polynomial& p);

/// Multiplicity of x0 as a root of p (p nonzero).
int root_order(const Polynomial& p, const Rational& x0);
/// Largest k with m^k | p, for nonconstant m and nonzero p.
int divisor_order(const Polynomial& p, const Polynomial& m);

/// Distinct rational roots in increasing order (exact; Sturm isolation on the
/// monic integer rescaling).
std::vector<Rational> rational_roots(const Polynomial& p);

/// Resultant of a and b (Euclidean remainder sequence over Q).
Rational resultant(const Polynomial& a, const Polynomial& b);

/// Complex roots of a polynomial with rational coefficients, with multiplicity.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p);

std::string to_string(const Polynomial& p, char variable = 'x');

}  // namespace hyperchow
