#include "hyperchow/cycles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hyperchow;
using namespace hyperchow::testing;

namespace {

HyperellipticCurve consecutive(int n, const Rational& scale = 1) {
  std::vector<Rational> roots;
  for (int k = 0; k < n; ++k) roots.emplace_back(k);
  return HyperellipticCurve(Polynomial::from_roots(roots) * scale);
}

// Twists with rational points away from the branch locus.
HyperellipticCurve twisted_genus2() { return consecutive(5, 105); }
HyperellipticCurve twisted_genus3() { return consecutive(7, 13090); }

std::vector<CurvePoint> points_at(const HyperellipticCurve& c, std::initializer_list<const char*> xs) {
  std::vector<CurvePoint> out;
  for (const char* s : xs) {
    const auto pts = points_over(c, parse_rational(s));
    EXPECT_EQ(pts.size(), 2u) << s;
    if (!pts.empty()) out.push_back(pts.front());
  }
  return out;
}

std::vector<CurvePoint> genus2_ts(const HyperellipticCurve& c) { return points_at(c, {"8", "9", "2/3", "9/4", "14/5"}); }
std::vector<CurvePoint> genus3_ts(const HyperellipticCurve& c) {
  return points_at(c, {"22/5", "32/5", "18/7", "33/8"});
}

std::vector<int> pair_counts(const ConfigurationReport& r) {
  std::vector<int> counts;
  for (const auto& row : r.intersection_table) counts.push_back(static_cast<int>(row.points.size()));
  std::sort(counts.begin(), counts.end());
  return counts;
}

bool all_incidences(const ConfigurationReport& r, std::size_t k) {
  return std::all_of(r.points.begin(), r.points.end(), [&](const IncidencePoint& p) { return p.curves.size() == k; });
}

}  // namespace

TEST(BasicCycle, GenusTwoExample) {
  const auto c = consecutive(5);
  const CurvePoint w1 = CurvePoint::branch(0), w2 = CurvePoint::infinity();
  const JacobianContext j(c, w1);
  const PreCycle k = basic_cycle(j, w2);
  ASSERT_EQ(k.terms.size(), 2u);
  EXPECT_EQ(k.terms[0].function, FunctionFieldElement::x(c));
  EXPECT_TRUE(boundary(j, k).is_zero());
  // a single term does not close up: 2[w1] - 2[w2]
  PreCycle single{Ambient::pic1, {k.terms[0]}};
  ZeroCycleOnJ expected;
  expected.add(j.point(w1), 2);
  expected.add(j.point(w2), -2);
  EXPECT_EQ(boundary(j, single), expected);
  EXPECT_FALSE(boundary(j, single).is_zero());
}

TEST(BasicCycle, GenusOneSmokeTest) {
  const HyperellipticCurve e(Polynomial::from_roots({Rational(0), Rational(1), Rational(3)}));
  const JacobianContext j(e, CurvePoint::branch(0));
  EXPECT_TRUE(boundary(j, basic_cycle(j, CurvePoint::infinity())).is_zero());
  EXPECT_TRUE(boundary(j, basic_cycle(j, CurvePoint::branch(3))).is_zero());
}

TEST(BasicCycle, RejectsNonBranchData) {
  const auto c = twisted_genus2();
  const auto ts = genus2_ts(c);
  EXPECT_THROW(basic_cycle(JacobianContext(c, CurvePoint::branch(0)), ts[0]), std::invalid_argument);
  EXPECT_THROW(basic_cycle(JacobianContext(c, ts[0]), CurvePoint::infinity()), std::invalid_argument);
}

TEST(TranslateCycle, IdentitySwapAndClosure) {
  const auto c = twisted_genus3();
  const CurvePoint w1 = CurvePoint::branch(0), w2 = CurvePoint::branch(1);
  const JacobianContext j(c, w1);
  const PreCycle k = basic_cycle(j, w2);
  EXPECT_TRUE(equivalent(j, translate_cycle(j, k, w1), k));
  const PreCycle swapped = translate_cycle(j, k, w2);
  EXPECT_TRUE(j.same_image(swapped.terms[0].curve, k.terms[1].curve));
  EXPECT_TRUE(j.same_image(swapped.terms[1].curve, k.terms[0].curve));
  EXPECT_TRUE(equivalent(j, swapped, k));
  for (const auto& t : genus3_ts(c)) {
    const PreCycle kt = translate_cycle(j, k, t);
    EXPECT_TRUE(boundary(j, kt).is_zero());
    // translation-equivariance of the boundary of a single term
    PreCycle single{Ambient::pic1, {k.terms[0]}}, moved{Ambient::pic1, {kt.terms[0]}};
    ZeroCycleOnJ shifted;
    const PicPoint shift = j.sub(j.point(t), j.zero(1));
    const ZeroCycleOnJ original = boundary(j, single);
    for (const auto& [p, n] : original.terms()) shifted.add(j.add(p, shift), n);
    EXPECT_EQ(boundary(j, moved), shifted);
  }
}

TEST(HyperellipticConfiguration, TrivialAndGenericCases) {
  for (const auto& c : {twisted_genus2(), twisted_genus3()}) {
    const CurvePoint w1 = CurvePoint::branch(0), w2 = CurvePoint::infinity();
    const JacobianContext j(c, w1);
    EXPECT_TRUE(canonical_form(j, hyperelliptic_configuration(j, w2, w1)).empty());
    const auto ts = c.genus() == 2 ? genus2_ts(c) : genus3_ts(c);
    for (const auto& t : ts) {
      const PreCycle z = hyperelliptic_configuration(j, w2, t);
      EXPECT_EQ(z.terms.size(), 4u);
      EXPECT_EQ(canonical_form(j, z).size(), 4u);
      const ConfigurationReport r = configuration_report(j, z);
      EXPECT_TRUE(r.is_cycle);
      // C_t meets W1 and W2 together only at w1
      std::vector<PicPoint> triple;
      for (const auto& p : r.points)
        if (std::find(p.curves.begin(), p.curves.end(), 0u) != p.curves.end() &&
            std::find(p.curves.begin(), p.curves.end(), 1u) != p.curves.end() &&
            std::find(p.curves.begin(), p.curves.end(), 2u) != p.curves.end())
          triple.push_back(p.point);
      EXPECT_EQ(triple, std::vector<PicPoint>{j.point(w1)});
    }
  }
}

TEST(Boundary, AdditiveAndRejectsIrrationalSupport) {
  const auto c = twisted_genus3();
  const CurvePoint w1 = CurvePoint::branch(0);
  const JacobianContext j(c, w1);
  const auto ts = genus3_ts(c);
  const PreCycle a = translate_cycle(j, PreCycle{Ambient::pic1, {basic_cycle(j, CurvePoint::branch(2)).terms[0]}}, ts[0]);
  const PreCycle b = PreCycle{Ambient::pic1, {basic_cycle(j, CurvePoint::branch(5)).terms[1]}};
  ZeroCycleOnJ sum = boundary(j, a);
  sum.add(boundary(j, b));
  EXPECT_EQ(boundary(j, a + b), sum);
  PreCycle bad = a;
  bad.terms[0].function = FunctionFieldElement::from_x(c, Polynomial({Rational(-2), Rational(0), Rational(1)}));
  EXPECT_THROW(boundary(j, bad), std::domain_error);
}

TEST(FourConfiguration, GenericBranchDatum) {
  const auto c = consecutive(7);
  const JacobianContext j(c, CurvePoint::branch(0));
  const CurvePoint a1 = CurvePoint::branch(1), a2 = CurvePoint::branch(2), p1 = CurvePoint::branch(4),
                   p2 = CurvePoint::infinity();
  const FourConfiguration cfg = four_configuration(j, a1, a2, p1, p2);
  EXPECT_EQ(cfg.epsilon, j.two_torsion_from_branch_partition({a1, a2, p1, p2}));
  EXPECT_TRUE(cfg.report.is_cycle);
  EXPECT_EQ(cfg.report.points_total, 8);
  EXPECT_TRUE(all_incidences(cfg.report, 2));
  EXPECT_EQ(pair_counts(cfg.report), (std::vector<int>{0, 0, 2, 2, 2, 2}));
  // C(a',a'') and C(p',p''), G and G_eps are the disjoint pairs
  for (const auto& row : cfg.report.intersection_table)
    if ((row.first == 0 && row.second == 2) || (row.first == 1 && row.second == 3)) EXPECT_TRUE(row.points.empty());
  // a' on G is a'' on C(a',a'') and conversely
  const auto& z1 = cfg.cycle.terms[0].curve;
  const auto& g = cfg.cycle.terms[1].curve;
  EXPECT_EQ(j.embed_point(g, a1), j.embed_point(z1, a2));
  EXPECT_EQ(j.embed_point(g, a2), j.embed_point(z1, a1));
  // translation by eps carries C(a',a'') to C(p',p'')
  EXPECT_TRUE(j.same_image(j.shifted(z1, cfg.epsilon), cfg.cycle.terms[2].curve));
}

TEST(FourConfiguration, RejectsNonTorsionDatum) {
  const auto c = twisted_genus3();
  const JacobianContext j(c, CurvePoint::branch(0));
  const auto ts = genus3_ts(c);
  EXPECT_THROW(four_configuration(j, ts[0], CurvePoint::branch(1), ts[1], CurvePoint::branch(2)), std::invalid_argument);
}

TEST(FourConfiguration, RandomAdmissibleData) {
  std::mt19937_64 rng(2024);
  int generic_genus3 = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int genus = 2 + trial % 2;
    const bool even = (trial / 2) % 2 == 1;
    const auto c = random_branch_rich_curve(rng, genus, even);
    auto branch = rational_branch_points(c);
    ASSERT_GE(branch.size(), 4u);
    std::shuffle(branch.begin(), branch.end(), rng);
    const JacobianContext j(c, branch[4 % branch.size()]);
    const int kind = trial % 3;
    const auto pool = some_points(c, 6);
    std::vector<CurvePoint> affine;
    for (const auto& p : pool)
      if (p.kind == PointKind::affine) affine.push_back(p);
    FourConfiguration cfg = [&] {
      if (kind == 1 && !affine.empty()) {
        const CurvePoint p = affine[static_cast<std::size_t>(trial) % affine.size()];
        return four_configuration(j, p, conjugate(c, p), branch[0], branch[1]);
      }
      if (kind == 2 && !affine.empty()) {
        const CurvePoint t = affine[static_cast<std::size_t>(trial) % affine.size()];
        return four_configuration(j, t, branch[0], t, branch[1]);
      }
      return four_configuration(j, branch[0], branch[1], branch[2], branch[3]);
    }();
    EXPECT_TRUE(cfg.report.is_cycle) << to_string(c.h()) << ": " << to_string(cfg.report.boundary);
    EXPECT_EQ(j.multiply(2, cfg.epsilon), j.zero());
    const bool generic = cfg.cycle.terms[0].curve.params[0] == branch[0] &&
                         cfg.cycle.terms[0].curve.params[1] == branch[1] &&
                         cfg.cycle.terms[2].curve.params[0] == branch[2];
    if (genus == 3 && generic) {
      EXPECT_EQ(cfg.report.points_total, 8) << to_string(c.h());
      EXPECT_TRUE(all_incidences(cfg.report, 2));
      EXPECT_EQ(pair_counts(cfg.report), (std::vector<int>{0, 0, 2, 2, 2, 2}));
      ++generic_genus3;
    }
  }
  EXPECT_GE(generic_genus3, 5);
}

TEST(Specialization, CurvesAndIntersections) {
  const auto c = twisted_genus3();
  const CurvePoint w1 = CurvePoint::branch(0), w2 = CurvePoint::branch(1);
  const JacobianContext j(c, w1);
  const auto ts = genus3_ts(c);
  for (const auto& t : ts) {
    const SpecializationResult s = specialize_and_compare_detailed(j, t, w2);
    EXPECT_TRUE(s.equal) << to_string(t);
    const auto& report = s.configuration.report;
    EXPECT_TRUE(report.is_cycle);
    EXPECT_EQ(report.points_total, 4);
    EXPECT_TRUE(all_incidences(report, 3));
    EXPECT_EQ(pair_counts(report), (std::vector<int>{2, 2, 2, 2, 2, 2}));
    // G -> W1, G_eps -> W2, C(t,w1) -> C_t, C(t,w2) -> C_{t+eps}
    const auto& mapped = s.specialized.terms;
    const auto& zt = s.expected.terms;  // W1, W2, C_t, C_{t+eps}
    EXPECT_TRUE(j.same_image(mapped[1].curve, zt[0].curve));
    EXPECT_TRUE(j.same_image(mapped[3].curve, zt[1].curve));
    EXPECT_TRUE(j.same_image(mapped[0].curve, zt[2].curve));
    EXPECT_TRUE(j.same_image(mapped[2].curve, zt[3].curve));
    // the identification C -> C(t,w1) -> C_t differs from C -> C_t by the involution
    EXPECT_TRUE(j.canonical(mapped[0].curve).second);
  }
}

TEST(Specialization, FiveRationalParameters) {
  const auto c = twisted_genus3();
  const JacobianContext j(c, CurvePoint::branch(0));
  auto ts = genus3_ts(c);
  ts.push_back(conjugate(c, ts[0]));
  ASSERT_EQ(ts.size(), 5u);
  for (const auto& t : ts) EXPECT_TRUE(specialize_and_compare(j, t, CurvePoint::infinity())) << to_string(t);
}

TEST(Genus2Decomposition, RestrictionsAndSymbolCycle) {
  const auto c = twisted_genus2();
  const CurvePoint w1 = CurvePoint::branch(0);
  for (const auto& w2 : {CurvePoint::infinity(), CurvePoint::branch(3)}) {
    const JacobianContext j(c, w1);
    const auto f = weierstrass_function(j, w1, w2);
    for (const auto& t : genus2_ts(c)) {
      const Genus2Check check = genus2_decomposition_check(j, w2, t);
      EXPECT_TRUE(check.report.is_cycle);
      EXPECT_TRUE(check.restriction_divisors_match) << to_string(t);
      EXPECT_EQ(check.restriction_divisors[0], divisor_of(f));
      EXPECT_EQ(check.restriction_divisors[1], -divisor_of(f));
      EXPECT_TRUE(check.symmetric_restrictions);
      EXPECT_TRUE(check.remainder_constant);
      // another gauge for the restrictions leaves only constant terms too
      PreCycle rescaled = check.symbol_cycle;
      for (auto& term : rescaled.terms) term.function = Rational(7, 3) * term.function;
      PreCycle twice = hyperelliptic_configuration(j, w2, t);
      for (auto& term : twice.terms) term.multiplicity *= 2;
      const auto rest = canonical_form(j, rescaled - twice);
      EXPECT_EQ(rest.size(), 4u);
      for (const auto& [offset, g] : rest) EXPECT_TRUE(g.is_constant());
      EXPECT_TRUE(check.passed());
      EXPECT_NE(check.c_t, 0);
      EXPECT_NE(check.k_t, 0);
    }
  }
  const auto g3 = twisted_genus3();
  EXPECT_THROW(genus2_decomposition_check(JacobianContext(g3, CurvePoint::branch(0)), CurvePoint::infinity(),
                                          genus3_ts(g3)[0]),
               std::invalid_argument);
}

TEST(FamilySections, StraightTwistedDifference) {
  const auto c = twisted_genus3();
  const CurvePoint w1 = CurvePoint::branch(0), w2 = CurvePoint::branch(6);
  const JacobianContext j(c, w1);
  const auto ts = genus3_ts(c);
  const FamilyDescriptor straight{FamilyKind::straight, w2}, twisted{FamilyKind::twisted, w2},
      difference{FamilyKind::difference, w2};
  const PreCycle s0 = family_section(j, straight, ts[0]), s1 = family_section(j, straight, ts[1]);
  ASSERT_EQ(s0.terms.size(), s1.terms.size());
  for (std::size_t k = 0; k < s0.terms.size(); ++k) {
    EXPECT_EQ(s0.terms[k].curve.offset, s1.terms[k].curve.offset);
    EXPECT_EQ(s0.terms[k].function, s1.terms[k].function);
  }
  EXPECT_TRUE(canonical_form(j, family_section(j, difference, w1)).empty());
  EXPECT_TRUE(equivalent(j, family_section(j, twisted, ts[2]), translate_cycle(j, basic_cycle(j, w2), ts[2])));
  EXPECT_TRUE(equivalent(j, family_section(j, difference, ts[2]), s0 - family_section(j, twisted, ts[2])));
}
