#include "hyperchow/jacobian.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hyperchow {

std::string to_string(const MumfordPair& m) { return "(" + to_string(m.u) + ", " + to_string(m.v) + ")"; }

std::string to_string(const PicPoint& p) { return "Pic^" + std::to_string(p.degree) + " " + to_string(p.cls); }

namespace detail {

namespace {

Tracked identity_tracked(const HyperellipticCurve& model, bool track) {
  Tracked t;
  if (track) t.witness = FunctionFieldElement::constant(model, 1);
  return t;
}

void multiply_witness(Tracked& t, const FunctionFieldElement& f) {
  if (t.witness) t.witness = *t.witness * f;
}

}  // namespace

bool is_valid_pair(const HyperellipticCurve& model, const MumfordPair& m) {
  if (m.u.is_zero() || m.u.leading() != 1) return false;
  if (m.v.degree() >= m.u.degree()) return false;
  return divides(m.u, m.v * m.v - model.h());
}

Tracked cantor_reduce(const HyperellipticCurve& model, Tracked t) {
  const int g = model.genus();
  const Polynomial& h = model.h();
  while (t.pair.u.degree() > g) {
    Polynomial next_u = exact_div(h - t.pair.v * t.pair.v, t.pair.u);
    // D(u, v) = D(u', -v) + div((y - v) / u')
    multiply_witness(t, FunctionFieldElement(model, -t.pair.v, Polynomial::constant(1), next_u));
    next_u = next_u.monic();
    t.pair.v = (-t.pair.v) % next_u;
    t.pair.u = std::move(next_u);
  }
  t.pair.v = t.pair.v % t.pair.u;
  return t;
}

Tracked cantor_add(const HyperellipticCurve& model, const Tracked& a, const Tracked& b) {
  const Polynomial &u1 = a.pair.u, &v1 = a.pair.v, &u2 = b.pair.u, &v2 = b.pair.v;
  const auto outer = xgcd(u1, u2);
  const auto inner = xgcd(outer.g, v1 + v2);
  const Polynomial& d = inner.g;
  const Polynomial s1 = inner.s * outer.s, s2 = inner.s * outer.t, s3 = inner.t;
  Tracked out;
  out.pair.u = exact_div(u1 * u2, d * d);
  const Polynomial numer = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + model.h());
  out.pair.v = exact_div(numer, d) % out.pair.u;
  if (a.witness && b.witness) {
    // pairs P + iota P cancelled by the gcd are div(d)
    out.witness = *a.witness * *b.witness * FunctionFieldElement::from_x(model, d);
  }
  return cantor_reduce(model, std::move(out));
}

Tracked cantor_negate(const HyperellipticCurve& model, const Tracked& t) {
  Tracked out;
  out.pair.u = t.pair.u;
  out.pair.v = (-t.pair.v) % t.pair.u;
  // D(u, v) + D(u, -v) = div(u)
  if (t.witness) out.witness = (FunctionFieldElement::from_x(model, t.pair.u) * *t.witness).inverse();
  return out;
}

Tracked cantor_multiply(const HyperellipticCurve& model, const Tracked& t, long long k) {
  if (k < 0) return cantor_multiply(model, cantor_negate(model, t), -k);
  Tracked result = identity_tracked(model, t.witness.has_value());
  Tracked base = t;
  while (k > 0) {
    if (k & 1) result = cantor_add(model, result, base);
    k >>= 1;
    if (k > 0) base = cantor_add(model, base, base);
  }
  return result;
}

}  // namespace detail

namespace {

MobiusMap odd_model_map(const HyperellipticCurve& c) {
  if (c.odd_model()) return MobiusMap::identity();
  const auto roots = rational_roots(c.h());
  if (roots.empty())
    throw std::domain_error("even model without a rational branch point: " + to_string(c.h()));
  return MobiusMap::send_to_infinity(roots.front());
}

MumfordPair pair_of_point(const CurvePoint& p) {
  switch (p.kind) {
    case PointKind::infinity: return {};
    case PointKind::branch: return {Polynomial::linear(p.x), {}};
    case PointKind::affine: return {Polynomial::linear(p.x), Polynomial::constant(p.y)};
  }
  throw std::logic_error("unknown point kind");
}

CurvePoint model_point(const Polynomial& v, const Rational& alpha) {
  const Rational y0 = v(alpha);
  return y0 == 0 ? CurvePoint::branch(alpha) : CurvePoint::affine(alpha, y0);
}

}  // namespace

JacobianContext::JacobianContext(HyperellipticCurve curve, CurvePoint basepoint)
    : curve_(curve), basepoint_(basepoint), transport_(mobius_transport(curve, odd_model_map(curve))) {
  require_on_curve(curve_, basepoint_);
  base_on_model_ = pair_of_point(transport_.forward(basepoint_));
}

PicPoint JacobianContext::lift(int degree, const MumfordPair& m) const { return PicPoint{degree, m}; }

PicPoint JacobianContext::zero(int degree) const { return lift(degree, {}); }

detail::Tracked JacobianContext::tracked_class(const Divisor& d, bool track) const {
  const HyperellipticCurve& m = model();
  detail::Tracked total;
  if (track) total.witness = FunctionFieldElement::constant(m, 1);
  auto accumulate = [&](detail::Tracked piece, int n) {
    piece = detail::cantor_reduce(m, std::move(piece));
    total = detail::cantor_add(m, total, detail::cantor_multiply(m, piece, n));
  };
  for (const auto& [p, n] : d.points()) {
    if (p.is_infinite()) continue;
    detail::Tracked piece;
    piece.pair = pair_of_point(p);
    if (track) piece.witness = FunctionFieldElement::constant(m, 1);
    accumulate(std::move(piece), n);
  }
  for (const auto& [atom, n] : d.atoms()) {
    detail::Tracked piece;
    switch (atom.kind) {
      case AtomKind::one_sided: piece.pair = {atom.u, atom.v}; break;
      case AtomKind::branch: piece.pair = {atom.u, {}}; break;
      case AtomKind::fiber:
        // both sheets: principal, div(u) = fiber - 2 deg(u) oo
        if (track) total.witness = *total.witness * pow(FunctionFieldElement::from_x(m, atom.u), n);
        continue;
      case AtomKind::infinity_pair: throw std::logic_error("infinity pair on an odd model");
    }
    if (track) piece.witness = FunctionFieldElement::constant(m, 1);
    accumulate(std::move(piece), n);
  }
  return total;
}

PicPoint JacobianContext::point(const CurvePoint& p) const {
  require_on_curve(curve_, p);
  detail::Tracked t{pair_of_point(transport_.forward(p)), {}};
  detail::Tracked base{base_on_model_, {}};
  return lift(1, detail::cantor_add(model(), t, detail::cantor_negate(model(), base)).pair);
}

PicPoint JacobianContext::class_of(const Divisor& d, int degree) const {
  if (d.curve() != curve_) throw std::invalid_argument("divisor lives on a different curve");
  if (d.degree() != degree)
    throw std::invalid_argument("degree mismatch: divisor has degree " + std::to_string(d.degree()) + ", expected " +
                                std::to_string(degree));
  const detail::Tracked t = tracked_class(transport_.forward(d), false);
  const detail::Tracked shift = detail::cantor_multiply(model(), {base_on_model_, {}}, -degree);
  return lift(degree, detail::cantor_add(model(), t, shift).pair);
}

PicPoint JacobianContext::add(const PicPoint& a, const PicPoint& b) const {
  return lift(a.degree + b.degree, detail::cantor_add(model(), {a.cls, {}}, {b.cls, {}}).pair);
}

PicPoint JacobianContext::neg(const PicPoint& a) const {
  return lift(-a.degree, detail::cantor_negate(model(), {a.cls, {}}).pair);
}

PicPoint JacobianContext::sub(const PicPoint& a, const PicPoint& b) const { return add(a, neg(b)); }

PicPoint JacobianContext::multiply(long long k, const PicPoint& a) const {
  return lift(static_cast<int>(k * a.degree), detail::cantor_multiply(model(), {a.cls, {}}, k).pair);
}

PrincipalityResult JacobianContext::is_principal(const Divisor& d, bool want_witness) const {
  if (d.curve() != curve_) throw std::invalid_argument("divisor lives on a different curve");
  if (d.degree() != 0) throw std::invalid_argument("principality needs a degree-0 divisor");
  PrincipalityResult result;
  const int bound = 2 * curve_.genus() + 4;
  bool track = want_witness;
  if (track && d.positive_part().degree() > bound) {
    track = false;
    result.note = "no witness computed: positive part exceeds degree " + std::to_string(bound);
  }
  const detail::Tracked t = tracked_class(transport_.forward(d), track);
  result.principal = t.pair.is_identity();
  if (result.principal && t.witness) {
    FunctionFieldElement f = normalize_leading(transport_.backward(*t.witness));
    if (divisor_of(f) != d) throw std::logic_error("principality witness has the wrong divisor");
    result.witness = std::move(f);
  }
  return result;
}

std::optional<CurvePoint> JacobianContext::as_point(const PicPoint& p) const {
  if (p.degree != 1) return std::nullopt;
  const MumfordPair m = detail::cantor_add(model(), {p.cls, {}}, {base_on_model_, {}}).pair;
  if (m.is_identity()) return transport_.backward(CurvePoint::infinity());
  if (m.u.degree() != 1) return std::nullopt;
  const Rational alpha = -m.u.coeff(0);
  return transport_.backward(model_point(m.v, alpha));
}

PicPoint JacobianContext::hyperelliptic_class() const {
  return lift(2, detail::cantor_multiply(model(), {base_on_model_, {}}, -2).pair);
}

PicPoint JacobianContext::two_torsion_from_branch_partition(const std::vector<CurvePoint>& branch_points) const {
  if (branch_points.size() % 2 != 0) throw std::invalid_argument("branch partition needs an even number of points");
  PicPoint total = zero(0);
  for (const auto& e : branch_points) {
    if (!is_weierstrass(curve_, e)) throw std::invalid_argument("not a branch point: " + to_string(e));
    total = add(total, point(e));
  }
  return sub(total, multiply(static_cast<long long>(branch_points.size() / 2), hyperelliptic_class()));
}

PicPoint JacobianContext::pic3_to_pic1(const PicPoint& p, const CurvePoint& t) const {
  if (p.degree != 3) throw std::invalid_argument("pic3_to_pic1 needs a point of Pic^3");
  return add(neg(p), multiply(2, add(point(t), zero(1))));
}

EmbeddedCurve JacobianContext::translate_embedding(const PicPoint& s) const {
  if (s.degree != 1) throw std::invalid_argument("translation point must lie in Pic^1");
  EmbeddedCurve e;
  e.kind = EmbeddingKind::translate;
  e.sign = 1;
  e.offset = sub(s, zero(1));
  auto p = as_point(s);
  if (p) e.params = {*p};
  e.label = p ? "C_{" + to_string(*p) + "}" : "C_{" + to_string(s) + "}";
  return e;
}

EmbeddedCurve JacobianContext::sum_embedding(const CurvePoint& y, const CurvePoint& z) const {
  EmbeddedCurve e;
  e.kind = EmbeddingKind::sum;
  e.params = {y, z};
  e.sign = 1;
  e.offset = add(point(y), point(z));
  e.label = "C(" + to_string(y) + ", " + to_string(z) + ")";
  return e;
}

EmbeddedCurve JacobianContext::flip_embedding(const CurvePoint& a1, const CurvePoint& a2) const {
  EmbeddedCurve e;
  e.kind = EmbeddingKind::flip;
  e.params = {a1, a2};
  e.sign = -1;
  e.offset = multiply(2, add(point(a1), point(a2)));
  e.label = "G(" + to_string(a1) + ", " + to_string(a2) + ")";
  return e;
}

EmbeddedCurve JacobianContext::shifted(const EmbeddedCurve& e, const PicPoint& shift, std::string label) const {
  if (shift.degree != 0) throw std::invalid_argument("shift must lie in Pic^0");
  EmbeddedCurve out = e;
  out.kind = EmbeddingKind::shifted;
  out.offset = add(e.offset, shift);
  out.label = label.empty() ? e.label + " + " + to_string(shift) : std::move(label);
  return out;
}

PicPoint JacobianContext::embed_point(const EmbeddedCurve& e, const CurvePoint& p) const {
  const PicPoint base = point(p);
  return add(e.sign > 0 ? base : neg(base), e.offset);
}

std::optional<CurvePoint> JacobianContext::preimage(const EmbeddedCurve& e, const PicPoint& q) const {
  if (q.degree != e.degree()) return std::nullopt;
  const PicPoint diff = sub(q, e.offset);
  return as_point(e.sign > 0 ? diff : neg(diff));
}

std::pair<EmbeddedCurve, bool> JacobianContext::canonical(const EmbeddedCurve& e) const {
  if (e.sign > 0) return {e, false};
  // -[P] + c = [iota P] - kappa + c
  EmbeddedCurve out = e;
  out.sign = 1;
  out.offset = sub(e.offset, hyperelliptic_class());
  return {out, true};
}

bool JacobianContext::same_image(const EmbeddedCurve& a, const EmbeddedCurve& b) const {
  return canonical(a).first.offset == canonical(b).first.offset;
}

CurveIntersection JacobianContext::intersect(const EmbeddedCurve& a, const EmbeddedCurve& b) const {
  if (curve_.genus() < 2) throw std::domain_error("curve intersections need genus >= 2");
  CurveIntersection out;
  if (a.degree() != b.degree()) return out;
  const PicPoint ca = canonical(a).first.offset, cb = canonical(b).first.offset;
  const PicPoint delta = sub(cb, ca);
  if (delta.cls.is_identity()) {
    out.same_curve = true;
    return out;
  }
  // [P] + [iota Q] = delta + kappa; on the model this is an effective
  // divisor of degree 2 with reduced class below.
  const PicPoint target = add(delta, hyperelliptic_class());
  const MumfordPair m =
      detail::cantor_add(model(), {target.cls, {}}, detail::cantor_multiply(model(), {base_on_model_, {}}, 2)).pair;
  std::vector<CurvePoint> on_model;
  const int k = m.u.degree();
  if (k == 2) {
    const auto roots = rational_roots(m.u);
    if (roots.empty()) {
      out.irrational_points = 2;
      return out;
    }
    if (roots.size() == 1) {
      on_model = {model_point(m.v, roots[0]), model_point(m.v, roots[0])};
    } else {
      on_model = {model_point(m.v, roots[0]), model_point(m.v, roots[1])};
    }
  } else if (k == 1) {
    on_model = {model_point(m.v, -m.u.coeff(0)), CurvePoint::infinity()};
  } else if (k == 0) {
    throw std::logic_error("distinct translates with trivial difference class");
  } else {
    return out;  // class not effective: the translates are disjoint
  }
  for (const auto& r : on_model) {
    const PicPoint image = add(point(transport_.backward(r)), ca);
    auto it = std::find(out.points.begin(), out.points.end(), image);
    if (it == out.points.end()) {
      out.points.push_back(image);
      out.multiplicities.push_back(1);
    } else {
      ++out.multiplicities[static_cast<std::size_t>(it - out.points.begin())];
    }
  }
  return out;
}

std::string to_string(const EmbeddedCurve& e) { return e.label; }

void ZeroCycleOnJ::add(const PicPoint& p, int multiplicity) {
  if (multiplicity == 0) return;
  if (!terms_.empty() && terms_.begin()->first.degree != p.degree)
    throw std::invalid_argument("zero-cycle terms must share one degree");
  auto& slot = terms_[p];
  slot += multiplicity;
  if (slot == 0) terms_.erase(p);
}

void ZeroCycleOnJ::add(const ZeroCycleOnJ& other, int multiplicity) {
  for (const auto& [p, n] : other.terms_) add(p, n * multiplicity);
}

int ZeroCycleOnJ::multiplicity(const PicPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::string to_string(const ZeroCycleOnJ& z) {
  if (z.is_zero()) return "0";
  std::string out;
  for (const auto& [p, n] : z.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(n) + "*[" + to_string(p) + "]";
  }
  return out;
}

}  // namespace hyperchow
