#pragma once

#include "hyperchow/numerics/quadrature.hpp"

#include <cstdint>
#include <string>

namespace hyperchow::numerics {

enum class Precision { standard, extended };

/// Reads HYPERCHOW_PRECISION ("extended" selects long double in the period
/// computations); anything else means standard double precision.
Precision precision_from_environment();
std::string to_string(Precision p);

/// Lattice of dx/y on y^2 = x (x - 1) (x - lambda).
struct EllipticPeriods {
  cplx omega1, omega2;  // reduced basis, Im(omega2 / omega1) > 0
  double covolume = 0;  // |Im(conj(omega1) omega2)|
};

/// Periods by the complex arithmetic-geometric mean, 2 pi / M(sqrt(e - e'),
/// sqrt(e - e'')) for each branch point e; the three periods are reduced to
/// a lattice basis. Throws std::domain_error for lambda in {0, 1}.
EllipticPeriods elliptic_periods(cplx lambda, Precision precision = precision_from_environment());

/// Complex AGM with the branch choice |a - b| <= |a + b| at every step.
cplx agm(cplx a, cplx b, Precision precision = Precision::standard);

/// Weierstrass p-function of the lattice Z p1 + Z p2 (q-series; p1, p2 a
/// reduced basis with Im(p2 / p1) > 0).
cplx weierstrass_p(cplx z, cplx p1, cplx p2);

/// x-coordinate on y^2 = x (x - 1) (x - lambda) at the point with abelian
/// coordinate z (dx / y = 2 dz, the lattice of z being half the period
/// lattice).
cplx legendre_x(cplx z, cplx lambda, const EllipticPeriods& periods);

struct MonteCarloResult {
  double mean = 0;
  double standard_error = 0;
  std::size_t samples = 0;
};

/// Mean of log|x| under the normalized invariant measure, by uniform samples
/// of the period parallelogram pushed through the elliptic parametrization.
MonteCarloResult monte_carlo_I(cplx lambda, std::size_t samples, std::uint64_t seed);

}  // namespace hyperchow::numerics
