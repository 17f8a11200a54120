#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abel/moments.hpp"
#include "abel/poly.hpp"

namespace abel {

/// f(t) = p(t^2) + t*q(t^2).
struct EvenOddSplit {
  Poly p;
  Poly q;
};

EvenOddSplit even_odd_split(const Poly& f);

/// Parameters of the level ratio (f(t1) + f(-t1)) / (1+nu)^{(n-1)/n} with
/// t1 = (1+nu)^{1/n}, recorded alongside sign-change reports.
struct LevelRatioParams {
  int n = 0;
  Poly f;
};

/// Evaluates the level ratio at u in [-1/n, 0]. At the singular endpoint
/// u = -1/n the limit sign is returned instead: 0.0 when the even part
/// vanishes at 0, otherwise a signed infinity. Throws DomainError for u
/// outside the interval.
double level_ratio_eval(const Poly& f, int n, const Rational& u);

struct SignChangeReport {
  int count = 0;  // sign changes of p strictly inside (a, b)
  // Isolating intervals, ascending; an exact rational root appears as a
  // degenerate pair [r, r].
  std::vector<std::pair<Rational, Rational>> locations;
  std::optional<LevelRatioParams> ratio_params;
};

/// Exact count of the sign changes of p on the open interval (a, b): roots
/// of odd multiplicity, located by Sturm sequences on the square-free part.
/// Boundary roots do not count. Throws ZeroPolynomialError when p = 0.
SignChangeReport sturm_sign_changes(const Poly& p, const Rational& a, const Rational& b);

struct MomentPropagationReport {
  EvenOddSplit split;
  SignChangeReport sign_changes;
  std::vector<Rational> moments;  // m_0 .. m_Kmax for g = t^{n-1}, all zero
};

/// For g = t^{n-1} (n even): checks the hypotheses (even part changes sign
/// at most twice on (0,1); m_0 = m_1 = m_2 = 0) and then asserts the
/// propagation m_k = 0 for all k <= Kmax. A hypothesis violation throws
/// HypothesisFailedError; a propagation violation can only come from a bug
/// in the moment computation itself, so it throws logic_error.
MomentPropagationReport moment_propagation_check(const Poly& f, int n, int Kmax);

}  // namespace abel
