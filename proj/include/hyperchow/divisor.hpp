#pragma once

#include "hyperchow/function_field.hpp"

#include <map>
#include <string>
#include <vector>

namespace hyperchow {

/// Closed points without rational coordinates, grouped symbolically:
///  branch         all ramification points over the roots of u (u | h)
///  fiber          both points over each root of u (gcd(u, h) = 1)
///  one_sided      the points (alpha, v(alpha)) for roots alpha of u, with
///                 v^2 = h mod u and gcd(u, h) = 1
///  infinity_pair  the degree-2 place at infinity of an even model whose
///                 leading coefficient is not a square
enum class AtomKind { branch, fiber, one_sided, infinity_pair };

struct ClosedAtom {
  AtomKind kind = AtomKind::branch;
  Polynomial u;  // monic squarefree (constant 1 for infinity_pair)
  Polynomial v;  // one_sided only, deg v < deg u

  int degree() const;
  friend bool operator==(const ClosedAtom& a, const ClosedAtom& b) {
    return a.kind == b.kind && a.u == b.u && a.v == b.v;
  }
};

std::string to_string(const ClosedAtom& atom);

/// Finite formal sum of places. Rational points are explicit; all other
/// places sit in canonical atoms, one per (kind, multiplicity), so equality
/// of divisors is structural equality.
class Divisor {
 public:
  explicit Divisor(HyperellipticCurve curve) : curve_(std::move(curve)) {}

  static Divisor point(const HyperellipticCurve& c, const CurvePoint& p, int multiplicity = 1);
  /// Validates the atom and splits off any rational points it contains.
  static Divisor atom(const HyperellipticCurve& c, ClosedAtom atom, int multiplicity = 1);

  const HyperellipticCurve& curve() const { return curve_; }
  const std::map<CurvePoint, int>& points() const { return points_; }
  const std::vector<std::pair<ClosedAtom, int>>& atoms() const { return atoms_; }

  bool is_zero() const { return points_.empty() && atoms_.empty(); }
  bool is_rational() const { return atoms_.empty(); }
  int degree() const;
  int multiplicity(const CurvePoint& p) const;

  Divisor operator-() const;
  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.curve_ == b.curve_ && a.points_ == b.points_ && a.atoms_ == b.atoms_;
  }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

  /// Parts with positive and negative multiplicity (the latter negated).
  Divisor positive_part() const;
  Divisor negative_part() const;

 private:
  friend Divisor combine(const std::vector<std::pair<const Divisor*, int>>& terms);
  void add_point(const CurvePoint& p, int n);
  HyperellipticCurve curve_;
  std::map<CurvePoint, int> points_;
  std::vector<std::pair<ClosedAtom, int>> atoms_;
};

/// Integer combination sum k_i D_i in canonical form.
Divisor combine(const std::vector<std::pair<const Divisor*, int>>& terms);

std::string to_string(const Divisor& d);

/// div(F) for F != 0; throws std::domain_error for F = 0.
Divisor divisor_of(const FunctionFieldElement& f);

/// Value of F on a symbolic place, as a + b*y in Q[x, y]/(u, y^2 - h)
/// (b = 0 except on fibers, where y is not determined by x). Requires the
/// denominator of F to be invertible on the place; throws std::domain_error
/// otherwise.
struct ResidueValue {
  ClosedAtom place;
  Polynomial a, b;
};
ResidueValue evaluate_at_place(const FunctionFieldElement& f, const ClosedAtom& place);

/// Product over every closed place P of N_{k(P)/Q}(tame symbol of (a, b) at
/// P). Weil reciprocity says this is 1.
Rational weil_reciprocity_product(const FunctionFieldElement& a, const FunctionFieldElement& b);

namespace detail {

/// Common refinement of the symbolic parts of several divisors into pieces
/// on which every input has constant multiplicity per sheet.
struct Piece {
  AtomKind kind = AtomKind::branch;  // branch, fiber (no sheet split) or one_sided (sheet = v)
  Polynomial p;
  Polynomial v;
  std::vector<int> plus;   // multiplicity on the sheet y = v (or on the point)
  std::vector<int> minus;  // multiplicity on the sheet y = -v
};
std::vector<Piece> refine(const std::vector<const Divisor*>& divisors);

/// Pairwise coprime monic squarefree polynomials whose products recover each input.
std::vector<Polynomial> coprime_basis(const std::vector<Polynomial>& inputs);

}  // namespace detail

}  // namespace hyperchow
