#pragma once

#include <optional>
#include <vector>

#include "abel/system.hpp"

namespace abel {

/// Truncated solution series x(t, rho) = rho + sum_{k=2..N} r_k(t) rho^k of
/// x' = f x^3 + g x^2 with x(a) = rho, plus the derived endpoint data.
struct ReturnMapSeries {
  int order = 0;                          // N
  std::vector<Poly> r;                    // r[k-2] holds r_k, k = 2..N
  std::vector<Rational> endpoint_values;  // r_k(b), same indexing
  // [G(b), F(b), integral(f*r_2), ..., integral(f*r_N)]: the rho-expansion
  // of the accumulated integral H(b, rho).
  std::vector<Rational> h_coeffs;

  const Poly& rk(int k) const { return r.at(static_cast<size_t>(k) - 2); }
  const Rational& endpoint(int k) const { return endpoint_values.at(static_cast<size_t>(k) - 2); }
};

/// Builds the series by the exact recurrence
///   r_m = integral_a^t [ f * (x^3)_m + g * (x^2)_m ],
/// where (x^2)_m, (x^3)_m are the rho^m coefficients of the truncated powers.
/// Polynomial systems only; trigonometric systems throw InvalidKindError.
ReturnMapSeries compute_return_series(const AbelSystem& sys, int N);

/// Least k with r_k(b) != 0, or absent when the truncated series shows no
/// obstruction (a center up to order N).
std::optional<int> center_order(const ReturnMapSeries& series);

/// The center-certificate integrals [integral(g), integral(f*r_2), ...,
/// integral(f*r_N)]; all zero up to order N certifies the return map to that
/// order.
std::vector<Rational> center_condition_integrals(const PolyAbelSystem& sys,
                                                 const ReturnMapSeries& series);

struct SeriesIdentityCheck {
  bool first = false;   // h_coeffs[1] equals integral(f)
  bool second = false;  // integral(f*r_2) equals integral(f*G)
  bool third = false;   // integral(f*r_3) equals integral(f*G^2) + integral(f*F)
  bool all() const { return first && second && third; }
};

/// Verifies the low-order integral identities linking the series to the
/// primitives F and G, each side computed independently.
SeriesIdentityCheck series_integral_identities(const PolyAbelSystem& sys,
                                               const ReturnMapSeries& series);

/// rho^m coefficients (m = 0..N) of x_N' - f x_N^3 - g x_N^2 computed by
/// direct polynomial convolution of the finished series; all must be zero.
std::vector<Poly> series_residual(const PolyAbelSystem& sys, const ReturnMapSeries& series);

}  // namespace abel
