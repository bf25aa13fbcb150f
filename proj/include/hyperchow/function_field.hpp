#pragma once

#include "hyperchow/curve.hpp"

#include <complex>
#include <string>

namespace hyperchow {

/// Element (a + b*y) / d of Q(C). Canonical form: gcd(a, b, d) = 1 and d
/// monic, so structural equality is equality of functions.
class FunctionFieldElement {
 public:
  FunctionFieldElement(HyperellipticCurve curve, Polynomial a, Polynomial b,
                       Polynomial d = Polynomial::constant(1));

  static FunctionFieldElement constant(const HyperellipticCurve& c, const Rational& value);
  static FunctionFieldElement from_x(const HyperellipticCurve& c, const Polynomial& p);
  static FunctionFieldElement x(const HyperellipticCurve& c);
  static FunctionFieldElement y(const HyperellipticCurve& c);

  const HyperellipticCurve& curve() const { return curve_; }
  const Polynomial& a() const { return a_; }
  const Polynomial& b() const { return b_; }
  const Polynomial& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const { return b_.is_zero() && a_.is_constant() && d_.is_constant(); }
  /// Value of a constant function; throws std::domain_error otherwise.
  Rational constant_value() const;

  /// Pullback under the hyperelliptic involution: (a - b*y) / d.
  FunctionFieldElement conjugate() const;
  FunctionFieldElement inverse() const;
  /// Norm to Q(x): numerator a^2 - b^2 h, denominator d^2 (not reduced).
  std::pair<Polynomial, Polynomial> norm() const;

  FunctionFieldElement operator-() const;
  friend FunctionFieldElement operator+(const FunctionFieldElement& f, const FunctionFieldElement& g);
  friend FunctionFieldElement operator-(const FunctionFieldElement& f, const FunctionFieldElement& g);
  friend FunctionFieldElement operator*(const FunctionFieldElement& f, const FunctionFieldElement& g);
  friend FunctionFieldElement operator*(const Rational& c, const FunctionFieldElement& f);
  friend FunctionFieldElement operator/(const FunctionFieldElement& f, const FunctionFieldElement& g);
  friend bool operator==(const FunctionFieldElement& f, const FunctionFieldElement& g) {
    return f.a_ == g.a_ && f.b_ == g.b_ && f.d_ == g.d_ && f.curve_ == g.curve_;
  }
  friend bool operator!=(const FunctionFieldElement& f, const FunctionFieldElement& g) { return !(f == g); }

  /// Value at a complex point (x, y) with y^2 = h(x).
  std::complex<double> evaluate(std::complex<double> x, std::complex<double> y) const;

 private:
  void canonicalize();
  HyperellipticCurve curve_;
  Polynomial a_, b_, d_;
};

FunctionFieldElement pow(const FunctionFieldElement& f, int exponent);

/// Scales f so the leading coefficient of its numerator (a, or b when a = 0)
/// is 1.
FunctionFieldElement normalize_leading(const FunctionFieldElement& f);

std::string to_string(const FunctionFieldElement& f);

/// Order of vanishing of F at P (negative for poles). Throws
/// std::domain_error("valuation of zero") for F = 0.
int valuation(const FunctionFieldElement& f, const CurvePoint& p);

/// Result of evaluating a function at a point.
struct PointValue {
  bool infinite = false;
  Rational value;  // meaningful when !infinite; zero at zeros of F
};

PointValue evaluate(const FunctionFieldElement& f, const CurvePoint& p);

/// (-1)^(v(a)v(b)) a^v(b) / b^v(a) evaluated at P.
Rational tame_symbol(const FunctionFieldElement& a, const FunctionFieldElement& b, const CurvePoint& p);

namespace detail {

/// gcd(a, b)-stripped data used by the valuation and evaluation formulas.
struct StrippedNumerator {
  Polynomial content;  // monic gcd(a, b)
  Polynomial a1, b1;   // a = content*a1, b = content*b1
  Polynomial norm1;    // a1^2 - b1^2 h
};
StrippedNumerator strip(const FunctionFieldElement& f);

/// Valuation at the infinite place(s) of an even model whose leading
/// coefficient is not a square (one closed point of degree 2).
int valuation_at_infinity_pair(const FunctionFieldElement& f);

}  // namespace detail

}  // namespace hyperchow
