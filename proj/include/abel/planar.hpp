#pragma once

#include <vector>

#include "abel/system.hpp"

namespace abel {

/// Planar perturbation of a linear center:
///   x' = -y + P_n(x, y),  y' = x + Q_n(x, y)
/// with P_n, Q_n homogeneous of degree n. Coefficient j multiplies
/// x^{n-j} y^j (x-degree descending).
struct PlanarSystem {
  int n = 2;
  std::vector<Rational> P;
  std::vector<Rational> Q;
};

/// Expands sum_j coeffs[j] * cos^{n-j}(theta) * sin^j(theta) into Fourier
/// form, exactly. coeffs must have length n+1.
TrigPoly trig_expand_homogeneous(const std::vector<Rational>& coeffs, int n);

/// Polar reduction to a trigonometric Abel system on [0, 2*pi]:
///   A = cos(theta) P_n + sin(theta) Q_n,  B = cos(theta) Q_n - sin(theta) P_n,
///   f = -(n-1) A B,  g = (n-1) A - B'.
AbelSystem cherkas_reduce(const PlanarSystem& sys);

}  // namespace abel
