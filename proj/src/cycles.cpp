#include "hyperchow/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperchow {

namespace {

bool is_one(const FunctionFieldElement& f) { return f.is_constant() && f.constant_value() == 1; }

void require_branch(const HyperellipticCurve& c, const CurvePoint& p, const char* role) {
  if (!is_weierstrass(c, p)) throw std::invalid_argument(std::string(role) + " must be a branch point: " + to_string(p));
}

const CurvePoint& w1_of(const JacobianContext& j) {
  require_branch(j.curve(), j.basepoint(), "basepoint w1");
  return j.basepoint();
}

// Divisor on the curve cut out on `host` by another embedded curve.
Divisor pulled_back(const JacobianContext& j, const EmbeddedCurve& host, const EmbeddedCurve& other) {
  const CurveIntersection meet = j.intersect(host, other);
  if (meet.same_curve) throw std::invalid_argument(host.label + " and " + other.label + " coincide");
  if (meet.irrational_points > 0)
    throw std::domain_error(host.label + " meets " + other.label + " in points not defined over Q");
  Divisor out(j.curve());
  for (std::size_t k = 0; k < meet.points.size(); ++k) {
    const auto p = j.preimage(host, meet.points[k]);
    if (!p) throw std::logic_error("intersection point without preimage on " + host.label);
    out += Divisor::point(j.curve(), *p, meet.multiplicities[k]);
  }
  return out;
}

}  // namespace

CanonicalPreCycle canonical_form(const JacobianContext& j, const PreCycle& z) {
  CanonicalPreCycle out;
  for (const auto& term : z.terms) {
    if (term.multiplicity == 0) continue;
    const auto [curve, flipped] = j.canonical(term.curve);
    FunctionFieldElement f = pow(flipped ? term.function.conjugate() : term.function, term.multiplicity);
    auto it = out.find(curve.offset);
    if (it == out.end()) {
      out.emplace(curve.offset, std::move(f));
    } else {
      it->second = it->second * f;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (is_one(it->second)) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

bool equivalent(const JacobianContext& j, const PreCycle& a, const PreCycle& b) {
  return a.ambient == b.ambient && canonical_form(j, a) == canonical_form(j, b);
}

ZeroCycleOnJ boundary(const JacobianContext& j, const PreCycle& z) {
  ZeroCycleOnJ out;
  for (const auto& term : z.terms) {
    const Divisor d = divisor_of(term.function);
    if (!d.is_rational())
      throw std::domain_error("boundary: div(" + to_string(term.function) + ") on " + term.curve.label +
                              " has closed points without rational coordinates: " + to_string(d.atoms().front().first));
    for (const auto& [p, n] : d.points()) out.add(j.embed_point(term.curve, p), term.multiplicity * n);
  }
  return out;
}

PreCycle operator+(const PreCycle& a, const PreCycle& b) {
  if (a.ambient != b.ambient && !a.terms.empty() && !b.terms.empty())
    throw std::invalid_argument("precycles live in different ambient spaces");
  PreCycle out = a;
  if (a.terms.empty()) out.ambient = b.ambient;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

PreCycle operator-(const PreCycle& z) {
  PreCycle out = z;
  for (auto& term : out.terms) term.multiplicity = -term.multiplicity;
  return out;
}

PreCycle operator-(const PreCycle& a, const PreCycle& b) { return a + (-b); }

FunctionFieldElement weierstrass_function(const JacobianContext& j, const CurvePoint& w1, const CurvePoint& w2) {
  require_branch(j.curve(), w1, "w1");
  require_branch(j.curve(), w2, "w2");
  if (w1 == w2) throw std::invalid_argument("w1 and w2 must differ");
  const auto r = j.is_principal(2 * Divisor::point(j.curve(), w1) - 2 * Divisor::point(j.curve(), w2));
  if (!r.principal || !r.witness) throw std::logic_error("2 w1 - 2 w2 has no rational witness");
  return *r.witness;
}

PreCycle basic_cycle(const JacobianContext& j, const CurvePoint& w2) {
  const CurvePoint& w1 = w1_of(j);
  const FunctionFieldElement f = weierstrass_function(j, w1, w2);
  EmbeddedCurve first = j.translate_embedding(j.point(w1)), second = j.translate_embedding(j.point(w2));
  first.label = "W1";
  second.label = "W2";
  return PreCycle{Ambient::pic1, {{first, f, 1}, {second, f, 1}}};
}

PreCycle translate_cycle(const JacobianContext& j, const PreCycle& z, const CurvePoint& t) {
  if (z.ambient != Ambient::pic1) throw std::invalid_argument("translation acts on Pic^1 precycles");
  const PicPoint shift = j.sub(j.point(t), j.zero(1));
  PreCycle out = z;
  for (auto& term : out.terms)
    term.curve = j.shifted(term.curve, shift, term.curve.label + "+[" + to_string(t) + "-w1]");
  return out;
}

PreCycle hyperelliptic_configuration(const JacobianContext& j, const CurvePoint& w2, const CurvePoint& t) {
  const PreCycle k = basic_cycle(j, w2);
  PreCycle kt = translate_cycle(j, k, t);
  kt.terms[0].curve.label = "C_t";
  kt.terms[1].curve.label = "C_{t+eps}";
  return k - kt;
}

ConfigurationReport configuration_report(const JacobianContext& j, const PreCycle& z) {
  ConfigurationReport report;
  report.boundary = boundary(j, z);
  report.is_cycle = report.boundary.is_zero();
  for (const auto& term : z.terms) report.curve_labels.push_back(term.curve.label);
  if (j.curve().genus() < 2) {
    report.notes.push_back("intersection table needs genus >= 2");
    return report;
  }
  std::vector<PicPoint> all;
  for (std::size_t a = 0; a < z.terms.size(); ++a)
    for (std::size_t b = a + 1; b < z.terms.size(); ++b) {
      const CurveIntersection meet = j.intersect(z.terms[a].curve, z.terms[b].curve);
      PairIntersection row{a, b, meet.same_curve, meet.points, meet.irrational_points};
      report.irrational_points += meet.irrational_points;
      for (const auto& p : meet.points)
        if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
      report.intersection_table.push_back(std::move(row));
    }
  std::sort(all.begin(), all.end());
  for (const auto& p : all) {
    IncidencePoint ip{p, {}};
    for (std::size_t k = 0; k < z.terms.size(); ++k)
      if (j.preimage(z.terms[k].curve, p)) ip.curves.push_back(k);
    report.points.push_back(std::move(ip));
  }
  report.points_total = static_cast<int>(report.points.size());
  if (z.ambient == Ambient::pic3)
    report.notes.push_back(
        "hyperelliptic model: disjointness for non-hyperelliptic curves is checked combinatorially only");
  return report;
}

FourConfiguration four_configuration(const JacobianContext& j, const CurvePoint& a1, const CurvePoint& a2,
                                     const CurvePoint& p1, const CurvePoint& p2) {
  const HyperellipticCurve& c = j.curve();
  const Divisor half = Divisor::point(c, a1) + Divisor::point(c, a2) - Divisor::point(c, p1) - Divisor::point(c, p2);
  const PicPoint eps = j.class_of(half, 0);
  if (j.multiply(2, eps) != j.zero())
    throw std::invalid_argument("not a 4-configuration datum: [a' + a'' - p' - p''] is not 2-torsion");
  const auto r = j.is_principal(2 * half);
  if (!r.witness) throw std::logic_error("no witness for 2(a' + a'' - p' - p''): " + r.note);
  const FunctionFieldElement& f = *r.witness;

  EmbeddedCurve z1 = j.sum_embedding(a1, a2), z2 = j.flip_embedding(a1, a2), z3 = j.sum_embedding(p1, p2);
  z1.label = "C(a',a'')";
  z2.label = "G";
  z3.label = "C(p',p'')";
  const EmbeddedCurve z4 = j.shifted(z2, eps, "G_eps");
  FourConfiguration out{PreCycle{Ambient::pic3, {{z1, f, -1}, {z2, f, 1}, {z3, f, -1}, {z4, f, 1}}}, {}, f, eps};
  out.report = configuration_report(j, out.cycle);
  return out;
}

PreCycle pic3_to_pic1(const JacobianContext& j, const PreCycle& z, const CurvePoint& t) {
  if (z.ambient != Ambient::pic3) throw std::invalid_argument("expected a Pic^3 precycle");
  const PicPoint twice = j.multiply(2, j.add(j.point(t), j.zero(1)));
  PreCycle out{Ambient::pic1, {}};
  for (const auto& term : z.terms) {
    CycleTerm moved = term;
    moved.curve.kind = EmbeddingKind::shifted;
    moved.curve.sign = -term.curve.sign;
    moved.curve.offset = j.add(j.neg(term.curve.offset), twice);
    moved.curve.label = "pic1(" + term.curve.label + ")";
    out.terms.push_back(std::move(moved));
  }
  return out;
}

SpecializationResult specialize_and_compare_detailed(const JacobianContext& j, const CurvePoint& t,
                                                     const CurvePoint& w2) {
  const CurvePoint& w1 = w1_of(j);
  SpecializationResult out{false, four_configuration(j, t, w1, t, w2), {}, {}};
  out.specialized = pic3_to_pic1(j, out.configuration.cycle, t);
  out.expected = hyperelliptic_configuration(j, w2, t);
  out.equal = equivalent(j, out.specialized, out.expected);
  return out;
}

bool specialize_and_compare(const JacobianContext& j, const CurvePoint& t, const CurvePoint& w2) {
  return specialize_and_compare_detailed(j, t, w2).equal;
}

Genus2Check genus2_decomposition_check(const JacobianContext& j, const CurvePoint& w2, const CurvePoint& t) {
  if (j.curve().genus() != 2) throw std::invalid_argument("genus-2 decomposition check needs a genus-2 curve");
  if (is_weierstrass(j.curve(), t)) throw std::invalid_argument("t must not be a branch point");
  const CurvePoint& w1 = w1_of(j);
  const FunctionFieldElement f = weierstrass_function(j, w1, w2);
  const PreCycle zt = hyperelliptic_configuration(j, w2, t);
  Genus2Check out;
  out.report = configuration_report(j, zt);

  // zt terms: W1, W2, C_t, C_{t+eps}; div(theta) = 2 W1 - 2 W2, div(theta_t) = 2 C_t - 2 C_{t+eps}
  std::vector<EmbeddedCurve> curves;
  for (const auto& term : zt.terms) curves.push_back(term.curve);
  const int order_theta[4] = {2, -2, 0, 0};
  const int order_theta_t[4] = {0, 0, 2, -2};
  for (std::size_t k = 0; k < 4; ++k) {
    // restriction of theta_t to W_i, of theta to the translates
    const int* orders = k < 2 ? order_theta_t : order_theta;
    Divisor restriction(j.curve());
    for (std::size_t other = 0; other < 4; ++other)
      if (orders[other] != 0) restriction += orders[other] * pulled_back(j, curves[k], curves[other]);
    out.restriction_divisors.push_back(restriction);
  }
  const Divisor df = divisor_of(f);
  const Divisor expected[4] = {df, -df, df, -df};
  out.restriction_divisors_match = true;
  for (std::size_t k = 0; k < 4; ++k)
    out.restriction_divisors_match = out.restriction_divisors_match && out.restriction_divisors[k] == expected[k];
  for (const auto& d : out.restriction_divisors) {
    const auto r = j.is_principal(d);
    if (!r.principal || !r.witness) throw std::logic_error("restriction divisor is not principal: " + to_string(d));
    out.restriction_functions.push_back(*r.witness);
  }
  const auto& rf = out.restriction_functions;
  out.symmetric_restrictions = (rf[0] * rf[1]).is_constant() && (rf[2] * rf[3]).is_constant();
  const FunctionFieldElement ratio_w = rf[0] / f, ratio_c = rf[2] / f;
  if (ratio_w.is_constant()) out.c_t = ratio_w.constant_value();
  if (ratio_c.is_constant()) out.k_t = ratio_c.constant_value();

  // T{theta_t, theta} on each component D: (-1)^(ab) theta_t^b / theta^a restricted, a = ord theta_t, b = ord theta
  out.symbol_cycle.ambient = Ambient::pic1;
  for (std::size_t k = 0; k < 4; ++k) {
    const int a = order_theta_t[k], b = order_theta[k];
    const FunctionFieldElement symbol = a == 0 ? pow(rf[k], b) : pow(rf[k], -a);
    out.symbol_cycle.terms.push_back({curves[k], (a * b) % 2 == 0 ? symbol : -symbol, 1});
  }
  PreCycle twice = zt;
  for (auto& term : twice.terms) term.multiplicity *= 2;
  out.remainder = canonical_form(j, out.symbol_cycle - twice);
  out.remainder_constant = true;
  for (const auto& [offset, g] : out.remainder) out.remainder_constant = out.remainder_constant && g.is_constant();
  return out;
}

PreCycle family_section(const JacobianContext& j, const FamilyDescriptor& family, const CurvePoint& t) {
  switch (family.kind) {
    case FamilyKind::straight: return basic_cycle(j, family.w2);
    case FamilyKind::twisted: return translate_cycle(j, basic_cycle(j, family.w2), t);
    case FamilyKind::difference: return hyperelliptic_configuration(j, family.w2, t);
  }
  throw std::logic_error("unknown family kind");
}

std::string to_string(const PreCycle& z) {
  if (z.terms.empty()) return "0";
  std::string out;
  for (const auto& term : z.terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(term.multiplicity) + " * " + term.curve.label + " (x) " + to_string(term.function);
  }
  return out;
}

}  // namespace hyperchow
