#pragma once

#include "hyperchow/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyperchow {

/// Smooth projective model of y^2 = h(x) over Q. Cheap to copy: the
/// equation data is shared and immutable.
class HyperellipticCurve {
 public:
  /// Throws std::invalid_argument unless h is squarefree of degree >= 3.
  explicit HyperellipticCurve(Polynomial h);

  const Polynomial& h() const { return impl_->h; }
  int genus() const { return impl_->genus; }
  bool odd_model() const { return impl_->h.degree() % 2 == 1; }
  /// Square root of lc(h) when it is rational (even models only matter).
  const std::optional<Rational>& leading_sqrt() const { return impl_->leading_sqrt; }
  /// Even model whose two points at infinity are rational.
  bool split_infinity() const { return !odd_model() && impl_->leading_sqrt.has_value(); }

  friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) {
    return a.impl_ == b.impl_ || a.impl_->h == b.impl_->h;
  }
  friend bool operator!=(const HyperellipticCurve& a, const HyperellipticCurve& b) { return !(a == b); }

 private:
  struct Impl {
    Polynomial h;
    int genus;
    std::optional<Rational> leading_sqrt;
  };
  std::shared_ptr<const Impl> impl_;
};

enum class PointKind { affine, branch, infinity };
/// Points at infinity: `single` on odd models; `plus`/`minus` on even
/// models, where y / x^(g+1) tends to +sqrt(lc h) resp. -sqrt(lc h).
enum class InfinitySheet { single, plus, minus };

/// A rational point of a hyperelliptic curve.
struct CurvePoint {
  PointKind kind = PointKind::infinity;
  Rational x;
  Rational y;
  InfinitySheet sheet = InfinitySheet::single;

  static CurvePoint affine(Rational x0, Rational y0);
  static CurvePoint branch(Rational x0);
  static CurvePoint infinity(InfinitySheet s = InfinitySheet::single);

  bool is_infinite() const { return kind == PointKind::infinity; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);
};

std::string to_string(const CurvePoint& p);

/// Membership test (y0 != 0 for affine points, h(x0) = 0 for branch points,
/// infinity sheet consistent with the model).
bool on_curve(const HyperellipticCurve& c, const CurvePoint& p);
/// Throws std::invalid_argument when the point is not on the curve.
void require_on_curve(const HyperellipticCurve& c, const CurvePoint& p);

/// Hyperelliptic involution y -> -y.
CurvePoint conjugate(const HyperellipticCurve& c, const CurvePoint& p);

/// All rational points lying over x = x0 (zero, one or two points).
std::vector<CurvePoint> points_over(const HyperellipticCurve& c, const Rational& x0);

/// Rational points at infinity (one, two, or none when lc(h) is not a square
/// on an even model).
std::vector<CurvePoint> points_at_infinity(const HyperellipticCurve& c);

/// Rational ramification points of x, including infinity on odd models.
std::vector<CurvePoint> rational_branch_points(const HyperellipticCurve& c);

bool is_weierstrass(const HyperellipticCurve& c, const CurvePoint& p);

}  // namespace hyperchow
