#pragma once

#include <optional>

#include "abel/system.hpp"

namespace abel {

/// Composition witness: F = Ftilde(W), G = Gtilde(W) with W(a) = W(b),
/// W monic of degree >= 2 with W(0) = 0.
struct PCCWitness {
  Poly w;
  Poly f_tilde;
  Poly g_tilde;
};

/// The unique monic W with W(0) = 0 and deg W = d such that P = Q(W) for
/// some Q, or nullopt when no such factor exists. Determined by matching the
/// top d-1 coefficients of P against powers of W, then verified by W-adic
/// expansion. Throws DegreeMismatchError when d does not divide deg P.
std::optional<Poly> right_factor(const Poly& P, int d);

/// The outer polynomial Q with P = Q(W), recovered from the W-adic digits of
/// P; nullopt when some digit is non-constant (P does not decompose over W).
std::optional<Poly> decompose_over(const Poly& P, const Poly& W);

/// Searches common divisor degrees d >= 2 of deg F, deg G in decreasing
/// order for a witness; absent means no witness under this search. When one
/// of F, G is zero the search runs over the other polynomial alone.
std::optional<PCCWitness> check_pcc(const PolyAbelSystem& sys);

/// Exact recomposition and endpoint check of a claimed witness.
bool verify_witness(const PolyAbelSystem& sys, const PCCWitness& w);

}  // namespace abel
