#pragma once

#include "hyperchow/jacobian.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperchow {

enum class Ambient { pic1, pic3 };

/// curve (x) function, counted `multiplicity` times.
struct CycleTerm {
  EmbeddedCurve curve;
  FunctionFieldElement function;
  int multiplicity = 1;
};

/// Formal sum of curves in Pic^d carrying rational functions.
struct PreCycle {
  Ambient ambient = Ambient::pic1;
  std::vector<CycleTerm> terms;
};

/// Terms with the same image merged (functions multiplied), every curve
/// parametrized with sign +1 (functions pulled back by the involution where
/// needed), trivial functions dropped. Keyed by the canonical offset.
using CanonicalPreCycle = std::map<PicPoint, FunctionFieldElement>;

CanonicalPreCycle canonical_form(const JacobianContext& j, const PreCycle& z);
bool equivalent(const JacobianContext& j, const PreCycle& a, const PreCycle& b);

/// sum_i m_i * (embedding)_* div(f_i). Throws std::domain_error when some
/// div(f_i) has closed points without rational coordinates.
ZeroCycleOnJ boundary(const JacobianContext& j, const PreCycle& z);

PreCycle operator+(const PreCycle& a, const PreCycle& b);
PreCycle operator-(const PreCycle& z);
PreCycle operator-(const PreCycle& a, const PreCycle& b);

/// Witness of 2 w1 - 2 w2, scaled to leading numerator coefficient 1.
FunctionFieldElement weierstrass_function(const JacobianContext& j, const CurvePoint& w1, const CurvePoint& w2);

/// K = W1 (x) f + W2 (x) f in Pic^1, where W_i = C_{w_i}. The context
/// basepoint must be w1.
PreCycle basic_cycle(const JacobianContext& j, const CurvePoint& w2);
/// Every curve moved by [t - w1]; functions unchanged.
PreCycle translate_cycle(const JacobianContext& j, const PreCycle& z, const CurvePoint& t);
/// Z_t = K - K_t.
PreCycle hyperelliptic_configuration(const JacobianContext& j, const CurvePoint& w2, const CurvePoint& t);

struct PairIntersection {
  std::size_t first = 0, second = 0;  // term indices
  bool same_curve = false;
  std::vector<PicPoint> points;
  int irrational_points = 0;
};

struct IncidencePoint {
  PicPoint point;
  std::vector<std::size_t> curves;  // term indices through the point
};

struct ConfigurationReport {
  ZeroCycleOnJ boundary;
  bool is_cycle = false;
  std::vector<std::string> curve_labels;
  std::vector<PairIntersection> intersection_table;
  std::vector<IncidencePoint> points;
  int points_total = 0;
  int irrational_points = 0;
  std::vector<std::string> notes;
};

/// Boundary plus the full intersection pattern of the supporting curves.
ConfigurationReport configuration_report(const JacobianContext& j, const PreCycle& z);

/// The four-curve cycle -Z1 + Z2 - Z3 + Z4 in Pic^3 on C(a', a''), G,
/// C(p', p''), G + eps, eps = [a' + a'' - p' - p'']. Throws
/// std::invalid_argument ("not a 4-configuration datum") unless eps is
/// 2-torsion.
struct FourConfiguration {
  PreCycle cycle;
  ConfigurationReport report;
  FunctionFieldElement function;
  PicPoint epsilon;
};
FourConfiguration four_configuration(const JacobianContext& j, const CurvePoint& a1, const CurvePoint& a2,
                                     const CurvePoint& p1, const CurvePoint& p2);

/// Curve by curve image of a Pic^3 precycle under p -> -p + 2([t] + [w1]).
PreCycle pic3_to_pic1(const JacobianContext& j, const PreCycle& z, const CurvePoint& t);

/// Builds Z(t) from the datum (t, w1, t, w2), carries it to Pic^1 and
/// compares it with K - K_t term by term. The context basepoint must be w1.
struct SpecializationResult {
  bool equal = false;
  FourConfiguration configuration;
  PreCycle specialized;
  PreCycle expected;
};
SpecializationResult specialize_and_compare_detailed(const JacobianContext& j, const CurvePoint& t,
                                                     const CurvePoint& w2);
bool specialize_and_compare(const JacobianContext& j, const CurvePoint& t, const CurvePoint& w2);

/// Curve-level verification of the genus-2 decomposition of Z_t.
struct Genus2Check {
  ConfigurationReport report;          // of Z_t
  bool restriction_divisors_match = false;
  bool symmetric_restrictions = false;
  /// restriction divisors on W1, W2, C_t, C_{t+eps} in curve coordinates
  std::vector<Divisor> restriction_divisors;
  /// principality witnesses of the restriction divisors
  std::vector<FunctionFieldElement> restriction_functions;
  Rational c_t, k_t;                   // ratios against f (gauge-dependent)
  PreCycle symbol_cycle;
  /// canonical terms of symbol_cycle - 2 Z_t
  CanonicalPreCycle remainder;
  bool remainder_constant = false;
  bool passed() const { return restriction_divisors_match && symmetric_restrictions && remainder_constant; }
};
/// Throws std::invalid_argument unless genus 2.
Genus2Check genus2_decomposition_check(const JacobianContext& j, const CurvePoint& w2, const CurvePoint& t);

enum class FamilyKind { straight, twisted, difference };
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::straight;
  CurvePoint w2;
};
PreCycle family_section(const JacobianContext& j, const FamilyDescriptor& family, const CurvePoint& t);

std::string to_string(const PreCycle& z);

}  // namespace hyperchow
