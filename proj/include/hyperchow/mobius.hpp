#pragma once

#include "hyperchow/divisor.hpp"

namespace hyperchow {

/// x -> (alpha x + beta) / (gamma x + delta) with alpha delta - beta gamma != 0.
struct MobiusMap {
  Rational alpha = 1, beta = 0, gamma = 0, delta = 1;

  static MobiusMap identity() { return {}; }
  /// x -> 1 / (x - e): sends e to infinity.
  static MobiusMap send_to_infinity(const Rational& e) { return {0, 1, 1, -e}; }
  Rational determinant() const { return alpha * delta - beta * gamma; }
};

namespace detail {

/// Change of model: old x = P(z) / Q(z), old y = scale * w * Q(z)^(-half),
/// where (z, w) are the new coordinates and P, Q have degree <= 1.
struct Substitution {
  Polynomial numer, denom;
  Rational scale;
  int half = 0;
};

}  // namespace detail

/// Isomorphism between y^2 = h(x) and Y^2 = H(X) with X = m(x) and
/// Y = y * (-gamma X + alpha)^(g+1), where
/// H(X) = sum_k h_k (delta X - beta)^k (-gamma X + alpha)^(2g+2-k).
class MobiusTransport {
 public:
  MobiusTransport(HyperellipticCurve source, MobiusMap map);

  const HyperellipticCurve& source() const { return source_; }
  const HyperellipticCurve& target() const { return target_; }
  const MobiusMap& map() const { return map_; }

  CurvePoint forward(const CurvePoint& p) const;
  CurvePoint backward(const CurvePoint& p) const;
  FunctionFieldElement forward(const FunctionFieldElement& f) const;
  FunctionFieldElement backward(const FunctionFieldElement& f) const;
  Divisor forward(const Divisor& d) const;
  Divisor backward(const Divisor& d) const;

 private:
  HyperellipticCurve source_, target_;
  MobiusMap map_;
  detail::Substitution to_target_, to_source_;
};

/// Throws std::invalid_argument for a singular map.
MobiusTransport mobius_transport(const HyperellipticCurve& c, const MobiusMap& m);

}  // namespace hyperchow
