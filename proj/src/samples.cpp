#include "hyperchow/samples.hpp"

#include <algorithm>

namespace hyperchow::samples {

Rational small_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Polynomial small_poly(std::mt19937_64& rng, int degree, int bound) {
  std::vector<Rational> c;
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (int k = 0; k <= degree; ++k) c.emplace_back(coef(rng));
  if (c.back() == 0) c.back() = 1;
  return Polynomial(c);
}

HyperellipticCurve random_curve(std::mt19937_64& rng, int degree) {
  static const int leads[] = {1, 1, 2, 3, -1, 4, 5};
  std::uniform_int_distribution<int> pick_lead(0, 6), quad(0, 2);
  while (true) {
    Polynomial h = Polynomial::constant(leads[pick_lead(rng)]);
    int deg = 0;
    while (deg + 2 <= degree && quad(rng) == 0) {
      std::uniform_int_distribution<int> k(1, 6);
      h *= Polynomial({Rational(k(rng)), Rational(1), Rational(1)});
      deg += 2;
    }
    while (deg < degree) {
      h *= Polynomial::linear(small_rational(rng, 6, 2));
      ++deg;
    }
    if (is_squarefree(h)) return HyperellipticCurve(h);
  }
}

HyperellipticCurve random_branch_rich_curve(std::mt19937_64& rng, int genus, bool even) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 3), lc_pick(0, 4), coin(0, 1);
  const Rational leads[] = {Rational(1), Rational(-1), Rational(2), Rational(3), Rational(-5)};
  while (true) {
    const int degree = 2 * genus + (even ? 2 : 1);
    std::vector<Rational> roots;
    const bool with_quadratic = coin(rng) == 1;
    const int linear = degree - (with_quadratic ? 2 : 0);
    while (static_cast<int>(roots.size()) < linear) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Polynomial h = Polynomial::from_roots(roots) * leads[lc_pick(rng)];
    if (with_quadratic) h *= Polynomial({Rational(num(rng) * num(rng) + 1), Rational(num(rng)), Rational(1)});
    if (!is_squarefree(h)) continue;
    return HyperellipticCurve(h);
  }
}

FunctionFieldElement random_function(std::mt19937_64& rng, const HyperellipticCurve& c) {
  std::uniform_int_distribution<int> deg(0, 3), coin(0, 2);
  const auto branch = rational_roots(c.h());
  while (true) {
    Polynomial a = small_poly(rng, deg(rng));
    Polynomial b = coin(rng) == 0 ? Polynomial{} : small_poly(rng, std::max(deg(rng) - 1, 0));
    Polynomial d = small_poly(rng, deg(rng) % 3);
    if (!branch.empty() && coin(rng) == 0) {
      std::uniform_int_distribution<std::size_t> which(0, branch.size() - 1);
      d *= Polynomial::linear(branch[which(rng)]);
    }
    if (coin(rng) == 0) a *= Polynomial::linear(small_rational(rng, 4, 1));
    FunctionFieldElement f(c, a, b, d);
    if (!f.is_zero()) return f;
  }
}

Divisor random_divisor(std::mt19937_64& rng, const HyperellipticCurve& c, const std::vector<CurvePoint>& pool) {
  std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
  std::uniform_int_distribution<int> mult(-2, 2), count(1, 4);
  Divisor d(c);
  for (int i = count(rng); i > 0; --i) d += Divisor::point(c, pool[which(rng)], mult(rng));
  return d;
}

std::vector<CurvePoint> some_points(const HyperellipticCurve& c, int bound) {
  std::vector<CurvePoint> out = points_at_infinity(c);
  for (const auto& r : rational_roots(c.h())) out.push_back(CurvePoint::branch(r));
  for (int den = 1; den <= 3; ++den)
    for (int num = -bound; num <= bound; ++num) {
      Rational x(num, den);
      x.canonicalize();
      if (x.get_den() != den) continue;
      for (const auto& p : points_over(c, x))
        if (p.kind == PointKind::affine) out.push_back(p);
    }
  return out;
}

}  // namespace hyperchow::samples
