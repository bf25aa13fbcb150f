#pragma once

#include "hyperchow/divisor.hpp"

#include <random>
#include <vector>

/// Seeded generators for randomized checks. Every routine draws only from the
/// engine it is given, so a fixed seed reproduces the data.
namespace hyperchow::samples {

Rational small_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4);
Polynomial small_poly(std::mt19937_64& rng, int degree, int bound = 5);

/// y^2 = lc * prod(x - r_i) * prod(x^2 + x + k): a mix of rational and
/// irrational branch points; `degree` in [3, 8].
HyperellipticCurve random_curve(std::mt19937_64& rng, int degree);
/// Genus 2 or 3, at least four rational branch points (odd or even model).
HyperellipticCurve random_branch_rich_curve(std::mt19937_64& rng, int genus, bool even);
FunctionFieldElement random_function(std::mt19937_64& rng, const HyperellipticCurve& c);
/// Sum of up to four rational points from `pool`, multiplicities in [-2, 2].
Divisor random_divisor(std::mt19937_64& rng, const HyperellipticCurve& c, const std::vector<CurvePoint>& pool);

/// Rational points at infinity, rational branch points, then affine points
/// with x = num / den, |num| <= bound, den <= 3.
std::vector<CurvePoint> some_points(const HyperellipticCurve& c, int bound = 12);

}  // namespace hyperchow::samples
