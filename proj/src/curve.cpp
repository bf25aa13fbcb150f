#include "hyperchow/curve.hpp"

#include <stdexcept>

namespace hyperchow {

HyperellipticCurve::HyperellipticCurve(Polynomial h) {
  if (h.degree() < 3) throw std::invalid_argument("curve equation needs degree >= 3");
  if (!is_squarefree(h)) throw std::invalid_argument("curve equation is not squarefree: " + to_string(h));
  auto impl = std::make_shared<Impl>();
  impl->genus = (h.degree() + 1) / 2 - 1;
  Rational root;
  if (rational_sqrt(h.leading(), root)) impl->leading_sqrt = root;
  impl->h = std::move(h);
  impl_ = std::move(impl);
}

CurvePoint CurvePoint::affine(Rational x0, Rational y0) {
  CurvePoint p;
  p.kind = PointKind::affine;
  p.x = std::move(x0);
  p.y = std::move(y0);
  return p;
}

CurvePoint CurvePoint::branch(Rational x0) {
  CurvePoint p;
  p.kind = PointKind::branch;
  p.x = std::move(x0);
  return p;
}

CurvePoint CurvePoint::infinity(InfinitySheet s) {
  CurvePoint p;
  p.sheet = s;
  return p;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case PointKind::affine: return a.x == b.x && a.y == b.y;
    case PointKind::branch: return a.x == b.x;
    case PointKind::infinity: return a.sheet == b.sheet;
  }
  return false;
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
    case PointKind::affine:
      if (a.x != b.x) return a.x < b.x;
      return a.y < b.y;
    case PointKind::branch: return a.x < b.x;
    case PointKind::infinity: return a.sheet < b.sheet;
  }
  return false;
}

std::string to_string(const CurvePoint& p) {
  switch (p.kind) {
    case PointKind::affine: return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
    case PointKind::branch: return "branch(" + to_string(p.x) + ")";
    case PointKind::infinity:
      if (p.sheet == InfinitySheet::plus) return "infinity+";
      if (p.sheet == InfinitySheet::minus) return "infinity-";
      return "infinity";
  }
  return "?";
}

bool on_curve(const HyperellipticCurve& c, const CurvePoint& p) {
  switch (p.kind) {
    case PointKind::affine: return p.y != 0 && p.y * p.y == c.h()(p.x);
    case PointKind::branch: return c.h()(p.x) == 0;
    case PointKind::infinity:
      if (c.odd_model()) return p.sheet == InfinitySheet::single;
      return c.split_infinity() && p.sheet != InfinitySheet::single;
  }
  return false;
}

void require_on_curve(const HyperellipticCurve& c, const CurvePoint& p) {
  if (!on_curve(c, p)) throw std::invalid_argument("point " + to_string(p) + " is not on y^2 = " + to_string(c.h()));
}

CurvePoint conjugate(const HyperellipticCurve& c, const CurvePoint& p) {
  switch (p.kind) {
    case PointKind::affine: return CurvePoint::affine(p.x, -p.y);
    case PointKind::branch: return p;
    case PointKind::infinity:
      if (c.odd_model()) return p;
      return CurvePoint::infinity(p.sheet == InfinitySheet::plus ? InfinitySheet::minus : InfinitySheet::plus);
  }
  return p;
}

std::vector<CurvePoint> points_over(const HyperellipticCurve& c, const Rational& x0) {
  const Rational value = c.h()(x0);
  if (value == 0) return {CurvePoint::branch(x0)};
  Rational root;
  if (!rational_sqrt(value, root)) return {};
  return {CurvePoint::affine(x0, root), CurvePoint::affine(x0, -root)};
}

std::vector<CurvePoint> points_at_infinity(const HyperellipticCurve& c) {
  if (c.odd_model()) return {CurvePoint::infinity()};
  if (!c.split_infinity()) return {};
  return {CurvePoint::infinity(InfinitySheet::plus), CurvePoint::infinity(InfinitySheet::minus)};
}

std::vector<CurvePoint> rational_branch_points(const HyperellipticCurve& c) {
  std::vector<CurvePoint> out;
  for (const auto& r : rational_roots(c.h())) out.push_back(CurvePoint::branch(r));
  if (c.odd_model()) out.push_back(CurvePoint::infinity());
  return out;
}

bool is_weierstrass(const HyperellipticCurve& c, const CurvePoint& p) {
  return p.kind == PointKind::branch || (p.kind == PointKind::infinity && c.odd_model());
}

}  // namespace hyperchow
