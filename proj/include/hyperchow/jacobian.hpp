#pragma once

#include "hyperchow/mobius.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperchow {

/// Mumford pair on an odd-degree model Y^2 = H(X): u monic, deg v < deg u,
/// u | v^2 - H. It stands for the divisor sum_{u(a)=0} (a, v(a)) - deg(u) oo.
struct MumfordPair {
  Polynomial u = Polynomial::constant(1);
  Polynomial v;

  bool is_identity() const { return u.is_one(); }
  friend bool operator==(const MumfordPair& a, const MumfordPair& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const MumfordPair& a, const MumfordPair& b) { return !(a == b); }
  friend bool operator<(const MumfordPair& a, const MumfordPair& b) {
    const int c = compare(a.u, b.u);
    return c != 0 ? c < 0 : compare(a.v, b.v) < 0;
  }
};

std::string to_string(const MumfordPair& m);

/// Point of Pic^degree, stored as the reduced class of D - degree * w1.
struct PicPoint {
  int degree = 0;
  MumfordPair cls;

  friend bool operator==(const PicPoint& a, const PicPoint& b) { return a.degree == b.degree && a.cls == b.cls; }
  friend bool operator!=(const PicPoint& a, const PicPoint& b) { return !(a == b); }
  friend bool operator<(const PicPoint& a, const PicPoint& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.cls < b.cls;
  }
};

std::string to_string(const PicPoint& p);

namespace detail {

/// Divisor bookkeeping for Cantor steps: input = D(pair) + div(witness).
struct Tracked {
  MumfordPair pair;
  std::optional<FunctionFieldElement> witness;
};

/// Cantor composition followed by reduction, on y^2 = h with deg h odd.
Tracked cantor_add(const HyperellipticCurve& model, const Tracked& a, const Tracked& b);
Tracked cantor_reduce(const HyperellipticCurve& model, Tracked t);
Tracked cantor_negate(const HyperellipticCurve& model, const Tracked& t);
Tracked cantor_multiply(const HyperellipticCurve& model, const Tracked& t, long long k);
/// u monic, deg v < deg u, u | v^2 - h; reducedness is not checked.
bool is_valid_pair(const HyperellipticCurve& model, const MumfordPair& m);

}  // namespace detail

struct PrincipalityResult {
  bool principal = false;
  /// Set when principal and a witness was requested and not declined.
  std::optional<FunctionFieldElement> witness;
  std::string note;
};

/// How a copy of the curve sits in Pic^d: P -> sign * [P - w1] + offset,
/// with offset in Pic^(d - sign).
enum class EmbeddingKind { translate, sum, flip, shifted };

struct EmbeddedCurve {
  EmbeddingKind kind = EmbeddingKind::translate;
  std::vector<CurvePoint> params;  // defining points, for reports
  int sign = 1;
  PicPoint offset;
  std::string label;

  int degree() const { return offset.degree + sign; }
};

/// Intersection of two embedded copies of the curve.
struct CurveIntersection {
  bool same_curve = false;
  std::vector<PicPoint> points;  // rational intersection points
  std::vector<int> multiplicities;
  int irrational_points = 0;     // geometric points not defined over Q
};

/// Jacobian arithmetic for one curve and basepoint. Even models are moved to
/// an odd model by sending a rational branch point to infinity; all classes
/// are reduced there, which makes (u, v) canonical.
class JacobianContext {
 public:
  /// Throws std::domain_error for an even model without rational branch point.
  JacobianContext(HyperellipticCurve curve, CurvePoint basepoint);

  const HyperellipticCurve& curve() const { return curve_; }
  const CurvePoint& basepoint() const { return basepoint_; }
  const HyperellipticCurve& model() const { return transport_.target(); }
  const MobiusTransport& transport() const { return transport_; }

  PicPoint zero(int degree = 0) const;
  /// [P] in Pic^1.
  PicPoint point(const CurvePoint& p) const;
  /// Throws std::invalid_argument when deg D != degree.
  PicPoint class_of(const Divisor& d, int degree) const;

  PicPoint add(const PicPoint& a, const PicPoint& b) const;
  PicPoint neg(const PicPoint& a) const;
  PicPoint sub(const PicPoint& a, const PicPoint& b) const;
  PicPoint multiply(long long k, const PicPoint& a) const;

  /// Principality of a degree-0 divisor. The witness comes from the Cantor
  /// steps; it is declined when the positive part has degree above 2g + 4.
  PrincipalityResult is_principal(const Divisor& d, bool want_witness = true) const;

  /// The point P with [P] = p, if p in Pic^1 lies on the curve.
  std::optional<CurvePoint> as_point(const PicPoint& p) const;
  /// [P] + [iota P], the same for every P.
  PicPoint hyperelliptic_class() const;
  /// sum_{e in S} [e] - (|S| / 2) * hyperelliptic_class(); S of even size
  /// inside the branch locus.
  PicPoint two_torsion_from_branch_partition(const std::vector<CurvePoint>& branch_points) const;
  /// -p + 2([t] + [w1]).
  PicPoint pic3_to_pic1(const PicPoint& p, const CurvePoint& t) const;

  EmbeddedCurve translate_embedding(const PicPoint& s) const;
  EmbeddedCurve sum_embedding(const CurvePoint& y, const CurvePoint& z) const;
  EmbeddedCurve flip_embedding(const CurvePoint& a1, const CurvePoint& a2) const;
  /// E + shift, shift in Pic^0.
  EmbeddedCurve shifted(const EmbeddedCurve& e, const PicPoint& shift, std::string label = {}) const;

  PicPoint embed_point(const EmbeddedCurve& e, const CurvePoint& p) const;
  /// The P with embed_point(e, P) = q, if any (unique for genus >= 2).
  std::optional<CurvePoint> preimage(const EmbeddedCurve& e, const PicPoint& q) const;
  /// Same image with sign +1: P -> P composed with the involution when the
  /// original sign was -1 (flipped = true).
  std::pair<EmbeddedCurve, bool> canonical(const EmbeddedCurve& e) const;
  bool same_image(const EmbeddedCurve& a, const EmbeddedCurve& b) const;
  /// Exact for genus >= 2: P - Q ~ delta has at most two solutions, read off
  /// the unique effective divisor in the class delta + [w1 + iota w1].
  CurveIntersection intersect(const EmbeddedCurve& a, const EmbeddedCurve& b) const;

 private:
  detail::Tracked tracked_class(const Divisor& model_divisor, bool track) const;
  PicPoint lift(int degree, const MumfordPair& m) const;

  HyperellipticCurve curve_;
  CurvePoint basepoint_;
  MobiusTransport transport_;
  MumfordPair base_on_model_;  // class of w1 - oo on the model
};

std::string to_string(const EmbeddedCurve& e);

/// Formal sum of points of one Pic^d.
class ZeroCycleOnJ {
 public:
  void add(const PicPoint& p, int multiplicity);
  void add(const ZeroCycleOnJ& other, int multiplicity = 1);
  bool is_zero() const { return terms_.empty(); }
  const std::map<PicPoint, int>& terms() const { return terms_; }
  int multiplicity(const PicPoint& p) const;
  friend bool operator==(const ZeroCycleOnJ& a, const ZeroCycleOnJ& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ZeroCycleOnJ& a, const ZeroCycleOnJ& b) { return !(a == b); }

 private:
  std::map<PicPoint, int> terms_;
};

std::string to_string(const ZeroCycleOnJ& z);

}  // namespace hyperchow
