#include "hyperchow/function_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperchow {

namespace {

void require_same_curve(const FunctionFieldElement& f, const FunctionFieldElement& g) {
  if (f.curve() != g.curve()) throw std::invalid_argument("function field elements live on different curves");
}

}  // namespace

FunctionFieldElement::FunctionFieldElement(HyperellipticCurve curve, Polynomial a, Polynomial b, Polynomial d)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_.is_zero()) throw std::domain_error("function field element with zero denominator");
  canonicalize();
}

void FunctionFieldElement::canonicalize() {
  if (a_.is_zero() && b_.is_zero()) {
    d_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(gcd(a_, b_), d_);
  if (g.degree() > 0) {
    a_ = exact_div(a_, g);
    b_ = exact_div(b_, g);
    d_ = exact_div(d_, g);
  }
  const Rational lc = d_.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    a_ *= inv;
    b_ *= inv;
    d_ *= inv;
  }
}

FunctionFieldElement FunctionFieldElement::constant(const HyperellipticCurve& c, const Rational& value) {
  return FunctionFieldElement(c, Polynomial::constant(value), Polynomial{});
}

FunctionFieldElement FunctionFieldElement::from_x(const HyperellipticCurve& c, const Polynomial& p) {
  return FunctionFieldElement(c, p, Polynomial{});
}

FunctionFieldElement FunctionFieldElement::x(const HyperellipticCurve& c) {
  return from_x(c, Polynomial({Rational(0), Rational(1)}));
}

FunctionFieldElement FunctionFieldElement::y(const HyperellipticCurve& c) {
  return FunctionFieldElement(c, Polynomial{}, Polynomial::constant(1));
}

Rational FunctionFieldElement::constant_value() const {
  if (!is_constant()) throw std::domain_error("function is not constant: " + to_string(*this));
  return a_.coeff(0) / d_.coeff(0);
}

FunctionFieldElement FunctionFieldElement::conjugate() const { return FunctionFieldElement(curve_, a_, -b_, d_); }

std::pair<Polynomial, Polynomial> FunctionFieldElement::norm() const {
  return {a_ * a_ - b_ * b_ * curve_.h(), d_ * d_};
}

FunctionFieldElement FunctionFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero function");
  const Polynomial n = a_ * a_ - b_ * b_ * curve_.h();
  return FunctionFieldElement(curve_, d_ * a_, -(d_ * b_), n);
}

FunctionFieldElement FunctionFieldElement::operator-() const { return FunctionFieldElement(curve_, -a_, -b_, d_); }

FunctionFieldElement operator+(const FunctionFieldElement& f, const FunctionFieldElement& g) {
  require_same_curve(f, g);
  if (f.d_ == g.d_) return FunctionFieldElement(f.curve_, f.a_ + g.a_, f.b_ + g.b_, f.d_);
  return FunctionFieldElement(f.curve_, f.a_ * g.d_ + g.a_ * f.d_, f.b_ * g.d_ + g.b_ * f.d_, f.d_ * g.d_);
}

FunctionFieldElement operator-(const FunctionFieldElement& f, const FunctionFieldElement& g) { return f + (-g); }

FunctionFieldElement operator*(const FunctionFieldElement& f, const FunctionFieldElement& g) {
  require_same_curve(f, g);
  const Polynomial& h = f.curve_.h();
  Polynomial a = f.a_ * g.a_ + f.b_ * g.b_ * h;
  Polynomial b = f.a_ * g.b_ + f.b_ * g.a_;
  return FunctionFieldElement(f.curve_, std::move(a), std::move(b), f.d_ * g.d_);
}

FunctionFieldElement operator*(const Rational& c, const FunctionFieldElement& f) {
  return FunctionFieldElement(f.curve_, f.a_ * c, f.b_ * c, f.d_);
}

FunctionFieldElement operator/(const FunctionFieldElement& f, const FunctionFieldElement& g) { return f * g.inverse(); }

std::complex<double> FunctionFieldElement::evaluate(std::complex<double> x, std::complex<double> y) const {
  return (a_.evaluate(x) + b_.evaluate(x) * y) / d_.evaluate(x);
}

FunctionFieldElement pow(const FunctionFieldElement& f, int exponent) {
  if (exponent < 0) return pow(f.inverse(), -exponent);
  FunctionFieldElement result = FunctionFieldElement::constant(f.curve(), 1), base = f;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

FunctionFieldElement normalize_leading(const FunctionFieldElement& f) {
  if (f.is_zero()) return f;
  const Rational lc = f.a().is_zero() ? f.b().leading() : f.a().leading();
  return Rational(1 / lc) * f;
}

std::string to_string(const FunctionFieldElement& f) {
  std::string num;
  if (f.b().is_zero()) {
    num = to_string(f.a());
  } else if (f.a().is_zero()) {
    num = "(" + to_string(f.b()) + ")*y";
  } else {
    num = to_string(f.a()) + " + (" + to_string(f.b()) + ")*y";
  }
  if (f.d().is_one()) return num;
  return "(" + num + ") / (" + to_string(f.d()) + ")";
}

namespace detail {

StrippedNumerator strip(const FunctionFieldElement& f) {
  StrippedNumerator s;
  s.content = gcd(f.a(), f.b());
  s.a1 = exact_div(f.a(), s.content);
  s.b1 = exact_div(f.b(), s.content);
  s.norm1 = s.a1 * s.a1 - s.b1 * s.b1 * f.curve().h();
  return s;
}

int valuation_at_infinity_pair(const FunctionFieldElement& f) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  const auto s = strip(f);
  const int half = f.curve().h().degree() / 2;
  int best = 0;
  bool have = false;
  if (!s.a1.is_zero()) {
    best = -s.a1.degree();
    have = true;
  }
  if (!s.b1.is_zero()) {
    const int vb = -s.b1.degree() - half;
    best = have ? std::min(best, vb) : vb;
  }
  return -s.content.degree() + best + f.d().degree();
}

}  // namespace detail

namespace {

int sheet_sign(InfinitySheet s) { return s == InfinitySheet::minus ? -1 : 1; }

// Valuation of a1 + b1*y (gcd(a1, b1) = 1) at a rational point at infinity,
// together with the leading coefficient of its expansion in 1/x (even models
// scale by x^(deg) only; odd models report the dominant coefficient).
struct InfinityLead {
  int valuation;
  Rational lead;  // leading coefficient in the appropriate power of x
};

InfinityLead stripped_at_infinity(const HyperellipticCurve& c, const detail::StrippedNumerator& s, InfinitySheet sheet) {
  const Polynomial& h = c.h();
  if (c.odd_model()) {
    const int n = h.degree();
    // v(x) = -2, v(y) = -n; the two terms never tie.
    int va = s.a1.is_zero() ? 1 << 29 : -2 * s.a1.degree();
    int vb = s.b1.is_zero() ? 1 << 29 : -2 * s.b1.degree() - n;
    if (va < vb) return {va, s.a1.leading()};
    return {vb, Rational(0)};  // odd valuation: never a unit at infinity
  }
  const int half = h.degree() / 2;
  const Rational root = *c.leading_sqrt();
  const int sign = sheet_sign(sheet);
  const int va = s.a1.is_zero() ? 1 << 29 : -s.a1.degree();
  const int vb = s.b1.is_zero() ? 1 << 29 : -s.b1.degree() - half;
  if (va < vb) return {va, s.a1.leading()};
  if (vb < va) return {vb, s.b1.leading() * root * sign};
  const Rational lead = s.a1.leading() + s.b1.leading() * root * sign;
  if (lead != 0) return {va, lead};
  // Cancellation on this sheet: a1 + b1 y = norm1 / (a1 - b1 y).
  const Rational other = s.a1.leading() - s.b1.leading() * root * sign;
  return {-s.norm1.degree() - va, s.norm1.leading() / other};
}

}  // namespace

int valuation(const FunctionFieldElement& f, const CurvePoint& p) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  const HyperellipticCurve& c = f.curve();
  require_on_curve(c, p);
  const auto s = detail::strip(f);
  switch (p.kind) {
    case PointKind::affine: {
      int v = root_order(s.content, p.x) - root_order(f.d(), p.x);
      if (s.a1(p.x) + s.b1(p.x) * p.y == 0) v += root_order(s.norm1, p.x);
      return v;
    }
    case PointKind::branch:
      return 2 * root_order(s.content, p.x) + root_order(s.norm1, p.x) - 2 * root_order(f.d(), p.x);
    case PointKind::infinity: {
      const int scale = c.odd_model() ? 2 : 1;
      const auto lead = stripped_at_infinity(c, s, p.sheet);
      return -scale * s.content.degree() + lead.valuation + scale * f.d().degree();
    }
  }
  return 0;
}

namespace {

Polynomial strip_root(const Polynomial& p, const Rational& x0, int k) {
  return exact_div(p, pow(Polynomial::linear(x0), k));
}

}  // namespace

PointValue evaluate(const FunctionFieldElement& f, const CurvePoint& p) {
  const int v = valuation(f, p);
  if (v > 0) return {false, Rational(0)};
  if (v < 0) return {true, Rational(0)};
  const HyperellipticCurve& c = f.curve();
  const auto s = detail::strip(f);
  switch (p.kind) {
    case PointKind::affine: {
      const int kc = root_order(s.content, p.x), kd = root_order(f.d(), p.x);
      const Rational cv = strip_root(s.content, p.x, kc)(p.x);
      const Rational dv = strip_root(f.d(), p.x, kd)(p.x);
      Rational nv = s.a1(p.x) + s.b1(p.x) * p.y;
      if (nv == 0) {
        const int kn = root_order(s.norm1, p.x);
        nv = strip_root(s.norm1, p.x, kn)(p.x) / (s.a1(p.x) - s.b1(p.x) * p.y);
      }
      return {false, cv * nv / dv};
    }
    case PointKind::branch: {
      const int kc = root_order(s.content, p.x), kd = root_order(f.d(), p.x);
      const Rational cv = strip_root(s.content, p.x, kc)(p.x);
      const Rational dv = strip_root(f.d(), p.x, kd)(p.x);
      return {false, cv * s.a1(p.x) / dv};
    }
    case PointKind::infinity: {
      const auto lead = stripped_at_infinity(c, s, p.sheet);
      return {false, s.content.leading() * lead.lead / f.d().leading()};
    }
  }
  return {};
}

namespace {

FunctionFieldElement uniformizer(const HyperellipticCurve& c, const CurvePoint& p) {
  switch (p.kind) {
    case PointKind::affine: return FunctionFieldElement::from_x(c, Polynomial::linear(p.x));
    case PointKind::branch: return FunctionFieldElement::y(c);
    case PointKind::infinity:
      if (c.odd_model()) return FunctionFieldElement(c, {}, Polynomial::monomial(1, c.genus()), c.h());
      return FunctionFieldElement(c, Polynomial::constant(1), {}, Polynomial::monomial(1, 1));
  }
  throw std::logic_error("unknown point kind");
}

// f = lead * t^v + higher order, for the uniformizer t chosen above
Rational leading_coefficient(const FunctionFieldElement& f, const CurvePoint& p, int v) {
  if (v == 0) {
    const auto value = evaluate(f, p);
    return value.value;
  }
  const auto unit = f * pow(uniformizer(f.curve(), p), -v);
  const auto value = evaluate(unit, p);
  if (value.infinite || value.value == 0) throw std::logic_error("leading coefficient is not a unit");
  return value.value;
}

Rational power(const Rational& base, int exponent) {
  Rational out = 1;
  const Rational b = exponent < 0 ? Rational(1 / base) : base;
  for (int i = 0; i < std::abs(exponent); ++i) out *= b;
  return out;
}

}  // namespace

Rational tame_symbol(const FunctionFieldElement& a, const FunctionFieldElement& b, const CurvePoint& p) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("tame symbol of the zero function");
  const int va = valuation(a, p), vb = valuation(b, p);
  if (va == 0 && vb == 0) return 1;
  const Rational value = power(leading_coefficient(a, p, va), vb) / power(leading_coefficient(b, p, vb), va);
  return ((va * vb) % 2 == 0) ? value : Rational(-value);
}

}  // namespace hyperchow
