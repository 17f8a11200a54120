#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abel/system.hpp"

namespace abel {

/// F(t) = integral of f from the interval start (F(a) = 0; trig: F(0) = 0).
Poly f_primitive(const PolyAbelSystem& sys);
TrigPoly f_primitive(const TrigAbelSystem& sys);
/// G(t) = integral of g from the interval start.
Poly g_primitive(const PolyAbelSystem& sys);
TrigPoly g_primitive(const TrigAbelSystem& sys);

/// Exact moment value: a plain rational for polynomial systems, a rational
/// multiple of pi for trigonometric ones.
struct MomentValue {
  Rational value;
  bool times_pi = false;

  bool is_zero() const { return value.is_zero(); }
  /// "0", "-2/3", "1/2*pi"
  std::string str() const;

  friend bool operator==(const MomentValue& x, const MomentValue& y) {
    return x.value == y.value && (x.value.is_zero() || x.times_pi == y.times_pi);
  }
  friend bool operator!=(const MomentValue& x, const MomentValue& y) { return !(x == y); }
};

/// m_k = integral of f * G^k over the system interval.
MomentValue moment(const AbelSystem& sys, int k);

struct MomentReport {
  std::vector<MomentValue> moments;  // m_0 .. m_K
  MomentValue g_integral;
  std::optional<int> first_nonzero_index;
};

/// Computes m_0..m_K (incrementally reusing G^k) plus the integral of g.
MomentReport moment_report(const AbelSystem& sys, int K);

struct MomentLinearSystem {
  std::vector<int> moment_indices;  // row labels
  std::vector<int> even_degrees;    // column labels
  std::vector<std::vector<Rational>> matrix;
  std::optional<Rational> det;  // present iff the matrix is square
  std::vector<std::vector<Rational>> kernel;
};

/// Linear system tying the even coefficients of f to the vanishing of the
/// first moments when g = t^{n-1}: entry (i, j) is the integral of
/// t^{d_j} * ((t^n - 1)/n)^{k_i} over [-1, 1], scaled by 1/(2 (-1)^k k!).
MomentLinearSystem moment_linear_system(int n, std::vector<int> even_degrees = {0, 2, 4},
                                        std::vector<int> moment_indices = {0, 1, 2});

/// Both sides of the exact identity  integral(f*F) = (F(b)^2 - F(a)^2)/2.
std::pair<Rational, Rational> f_primitive_identity(const PolyAbelSystem& sys);

}  // namespace abel
