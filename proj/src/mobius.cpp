#include "hyperchow/mobius.hpp"

#include <stdexcept>

namespace hyperchow {

namespace {

using detail::Substitution;

Polynomial power_of(const Polynomial& p, int k) { return pow(p, k); }

// p(P/Q) * Q^L for L >= deg p.
Polynomial homogenize(const Polynomial& p, const Polynomial& numer, const Polynomial& denom, int total) {
  Polynomial out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    out += p.coeff(k) * (power_of(numer, k) * power_of(denom, total - k));
  }
  return out;
}

Rational rational_pow(const Rational& r, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= r;
  return out;
}

Polynomial apply_curve(const Polynomial& h, const Substitution& s) {
  Polynomial out = homogenize(h, s.numer, s.denom, 2 * s.half);
  return out * Rational(1 / (s.scale * s.scale));
}

FunctionFieldElement apply_function(const HyperellipticCurve& target, const FunctionFieldElement& f, const Substitution& s) {
  const int deg_a = std::max(f.a().degree(), 0);
  const int deg_b = f.b().is_zero() ? 0 : f.b().degree() + s.half;
  const int total = std::max({deg_a, deg_b, f.d().degree()});
  Polynomial a = homogenize(f.a(), s.numer, s.denom, total);
  Polynomial b;
  if (!f.b().is_zero()) b = homogenize(f.b(), s.numer, s.denom, total - s.half) * s.scale;
  Polynomial d = homogenize(f.d(), s.numer, s.denom, total);
  return FunctionFieldElement(target, std::move(a), std::move(b), std::move(d));
}

int sign_of(const Rational& r) { return sgn(r); }

InfinitySheet sheet_for(int sign) { return sign > 0 ? InfinitySheet::plus : InfinitySheet::minus; }

CurvePoint apply_point(const HyperellipticCurve& from, const HyperellipticCurve& to, const CurvePoint& p,
                       const Substitution& s) {
  require_on_curve(from, p);
  const Rational p1 = s.numer.coeff(1), p0 = s.numer.coeff(0);
  const Rational q1 = s.denom.coeff(1), q0 = s.denom.coeff(0);
  const int n = s.half;
  if (p.kind == PointKind::infinity) {
    if (q1 != 0) {
      const Rational z0 = -q0 / q1;
      if (from.odd_model()) return CurvePoint::branch(z0);
      const Rational root = *from.leading_sqrt() * (p.sheet == InfinitySheet::plus ? 1 : -1);
      return CurvePoint::affine(z0, root * rational_pow(s.numer(z0), n) / s.scale);
    }
    if (from.odd_model()) return CurvePoint::infinity();
    const int sign = (p.sheet == InfinitySheet::plus ? 1 : -1) * sign_of(rational_pow(p1, n) / s.scale);
    return CurvePoint::infinity(sheet_for(sign));
  }
  const Rational den = p1 - q1 * p.x;
  if (den == 0) {
    if (p.kind == PointKind::branch) return CurvePoint::infinity();
    return CurvePoint::infinity(sheet_for(sign_of(p.y * rational_pow(q1, n) / s.scale)));
  }
  const Rational z0 = (q0 * p.x - p0) / den;
  if (p.kind == PointKind::branch) return CurvePoint::branch(z0);
  (void)to;
  return CurvePoint::affine(z0, p.y * rational_pow(s.denom(z0), n) / s.scale);
}

Divisor apply_divisor(const HyperellipticCurve& from, const HyperellipticCurve& to, const Divisor& d,
                      const Substitution& s) {
  if (d.curve() != from) throw std::invalid_argument("divisor lives on a different curve");
  Divisor out(to);
  for (const auto& [p, n] : d.points()) out += Divisor::point(to, apply_point(from, to, p, s), n);
  const Rational p1 = s.numer.coeff(1), q1 = s.denom.coeff(1), q0 = s.denom.coeff(0);
  const bool loses_root = q1 != 0;
  const Rational lost = loses_root ? p1 / q1 : Rational(0);
  for (const auto& [atom, n] : d.atoms()) {
    if (atom.kind == AtomKind::infinity_pair) {
      if (q1 != 0) out += Divisor::atom(to, ClosedAtom{AtomKind::fiber, Polynomial::linear(-q0 / q1), Polynomial{}}, n);
      else out += Divisor::atom(to, atom, n);
      continue;
    }
    Polynomial u = atom.u;
    if (loses_root && u(lost) == 0) {
      if (atom.kind != AtomKind::fiber) throw std::logic_error("symbolic atom contains a rational point");
      out += Divisor::atom(to, ClosedAtom{AtomKind::infinity_pair, Polynomial::constant(1), Polynomial{}}, n);
      u = exact_div(u, Polynomial::linear(lost));
      if (u.degree() <= 0) continue;
    }
    ClosedAtom moved;
    moved.kind = atom.kind;
    moved.u = homogenize(u, s.numer, s.denom, u.degree()).monic();
    if (atom.kind == AtomKind::one_sided) {
      const Polynomial v = atom.v % u;
      const Polynomial qinv = inverse_mod(s.denom, moved.u);
      Polynomial acc;
      const Polynomial qn = power_of(s.denom, s.half) % moved.u;
      for (int k = 0; k <= v.degree(); ++k) {
        if (v.coeff(k) == 0) continue;
        acc += v.coeff(k) * ((power_of(s.numer, k) * power_of(qinv, k) * qn) % moved.u);
      }
      moved.v = (acc * Rational(1 / s.scale)) % moved.u;
    }
    out += Divisor::atom(to, moved, n);
  }
  return out;
}

}  // namespace

MobiusTransport::MobiusTransport(HyperellipticCurve source, MobiusMap map)
    : source_(source), target_(source), map_(map) {
  const Rational det = map.determinant();
  if (det == 0) throw std::invalid_argument("singular Mobius map");
  const int half = source.genus() + 1;
  to_target_ = Substitution{Polynomial({-map.beta, map.delta}), Polynomial({map.alpha, -map.gamma}), Rational(1), half};
  to_source_ = Substitution{Polynomial({map.beta, map.alpha}), Polynomial({map.delta, map.gamma}),
                            rational_pow(det, half), half};
  target_ = HyperellipticCurve(apply_curve(source.h(), to_target_));
}

CurvePoint MobiusTransport::forward(const CurvePoint& p) const { return apply_point(source_, target_, p, to_target_); }
CurvePoint MobiusTransport::backward(const CurvePoint& p) const { return apply_point(target_, source_, p, to_source_); }

FunctionFieldElement MobiusTransport::forward(const FunctionFieldElement& f) const {
  if (f.curve() != source_) throw std::invalid_argument("function lives on a different curve");
  return apply_function(target_, f, to_target_);
}

FunctionFieldElement MobiusTransport::backward(const FunctionFieldElement& f) const {
  if (f.curve() != target_) throw std::invalid_argument("function lives on a different curve");
  return apply_function(source_, f, to_source_);
}

Divisor MobiusTransport::forward(const Divisor& d) const { return apply_divisor(source_, target_, d, to_target_); }
Divisor MobiusTransport::backward(const Divisor& d) const { return apply_divisor(target_, source_, d, to_source_); }

MobiusTransport mobius_transport(const HyperellipticCurve& c, const MobiusMap& m) { return MobiusTransport(c, m); }

}  // namespace hyperchow
