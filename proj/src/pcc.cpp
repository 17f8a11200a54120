#include "abel/pcc.hpp"

#include <numeric>
#include <stdexcept>

#include "abel/moments.hpp"

namespace abel {

std::optional<Poly> decompose_over(const Poly& P, const Poly& W) {
  if (W.is_constant()) throw std::invalid_argument("decompose_over: W must be nonconstant");
  std::vector<Rational> digits;
  Poly cur = P;
  while (!cur.is_zero()) {
    auto [q, rem] = Poly::divmod(cur, W);
    if (!rem.is_constant()) return std::nullopt;
    digits.push_back(rem.coeff(0));
    cur = q;
  }
  return Poly(std::move(digits));
}

std::optional<Poly> right_factor(const Poly& P, int d) {
  if (d < 2) throw std::invalid_argument("right_factor: d must be >= 2");
  if (P.is_constant()) throw std::invalid_argument("right_factor: P must be nonconstant");
  int D = *P.degree();
  if (D % d != 0) throw DegreeMismatchError("right_factor: d does not divide deg P");
  int e = D / d;

  Poly Phat = P.monic();
  // Build W coefficient by coefficient from the top: the t^{D-i} coefficient
  // of W^e is e*a_{d-i} plus terms in already-known higher coefficients, so
  // each a_{d-i} is forced.
  Poly W = Poly::monomial(d);
  for (int i = 1; i <= d - 1; ++i) {
    Rational known = W.pow(e).coeff(D - i);
    Rational a = (Phat.coeff(D - i) - known) / Rational(e);
    W += Poly::monomial(d - i, a);
  }
  if (!decompose_over(P, W)) return std::nullopt;
  return W;
}

namespace {

std::vector<int> divisors_descending(int n) {
  std::vector<int> out;
  for (int d = n; d >= 2; --d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Right factor of degree d for "primary", then checks that "other" (when
// nonzero) decomposes over the same W.
std::optional<PCCWitness> try_degree(const Poly& primary, const Poly& other, bool primary_is_F,
                                     int d, const Rational& a, const Rational& b) {
  auto W = right_factor(primary, d);
  if (!W) return std::nullopt;
  if ((*W)(a) != (*W)(b)) return std::nullopt;
  auto primary_outer = decompose_over(primary, *W);
  std::optional<Poly> other_outer;
  if (other.is_zero()) {
    other_outer = Poly();
  } else {
    other_outer = decompose_over(other, *W);
    if (!other_outer) return std::nullopt;
  }
  PCCWitness wit;
  wit.w = *W;
  wit.f_tilde = primary_is_F ? *primary_outer : *other_outer;
  wit.g_tilde = primary_is_F ? *other_outer : *primary_outer;
  return wit;
}

}  // namespace

std::optional<PCCWitness> check_pcc(const PolyAbelSystem& sys) {
  if (sys.f.is_zero() && sys.g.is_zero())
    throw std::invalid_argument("check_pcc: f and g must not both be zero");
  Poly F = f_primitive(sys);
  Poly G = g_primitive(sys);

  if (F.is_zero() || G.is_zero()) {
    const Poly& p = F.is_zero() ? G : F;
    for (int d : divisors_descending(*p.degree())) {
      auto wit = try_degree(p, Poly(), !F.is_zero(), d, sys.a, sys.b);
      if (wit) return wit;
    }
    return std::nullopt;
  }

  int common = std::gcd(*F.degree(), *G.degree());
  for (int d : divisors_descending(common)) {
    auto wit = try_degree(F, G, true, d, sys.a, sys.b);
    if (wit) return wit;
    // The normalized degree-d right factor is unique when it exists, but the
    // search treats F and G symmetrically: extracting from G can still
    // succeed when F has no degree-d factor at all.
    wit = try_degree(G, F, false, d, sys.a, sys.b);
    if (wit) return wit;
  }
  return std::nullopt;
}

bool verify_witness(const PolyAbelSystem& sys, const PCCWitness& w) {
  auto dw = w.w.degree();
  if (!dw || *dw < 2) return false;
  if (w.w(sys.a) != w.w(sys.b)) return false;
  return f_primitive(sys) == w.f_tilde.compose(w.w) && g_primitive(sys) == w.g_tilde.compose(w.w);
}

}  // namespace abel
