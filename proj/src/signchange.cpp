#include "abel/signchange.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "abel/errors.hpp"

namespace abel {

EvenOddSplit even_odd_split(const Poly& f) {
  std::vector<Rational> pc, qc;
  const auto& c = f.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 0)
      pc.push_back(c[i]);
    else
      qc.push_back(c[i]);
  }
  return {Poly(std::move(pc)), Poly(std::move(qc))};
}

double level_ratio_eval(const Poly& f, int n, const Rational& u) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("level_ratio_eval: n must be even and positive");
  Rational lo(-1, n);
  if (u < lo || u > Rational(0))
    throw DomainError("level_ratio_eval: u outside [-1/n, 0]");

  Rational s = Rational(1) + Rational(n) * u;
  if (s.is_zero()) {
    Poly p = even_odd_split(f).p;
    Rational p0 = p(Rational(0));
    if (p0.is_zero()) return 0.0;
    double inf = std::numeric_limits<double>::infinity();
    return p0.sign() > 0 ? inf : -inf;
  }
  double sd = s.to_double();
  double t1 = std::pow(sd, 1.0 / n);
  double numer = f.eval_double(t1) + f.eval_double(-t1);
  return numer / std::pow(sd, static_cast<double>(n - 1) / n);
}

namespace {

std::vector<Poly> sturm_chain(const Poly& h) {
  std::vector<Poly> chain{h, h.derivative()};
  while (!chain.back().is_zero()) {
    const Poly& s0 = chain[chain.size() - 2];
    const Poly& s1 = chain.back();
    chain.push_back(-Poly::divmod(s0, s1).second);
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const Poly& s : chain) {
    int sg = s(x).sign();
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

void isolate(const std::vector<Poly>& chain, const Poly& h, const Rational& lo,
             const Rational& hi, int roots,
             std::vector<std::pair<Rational, Rational>>& out) {
  if (roots == 0) return;
  if (roots == 1) {
    if (h(hi).is_zero())
      out.emplace_back(hi, hi);
    else
      out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  int vm = variations(chain, mid);
  int left = variations(chain, lo) - vm;
  isolate(chain, h, lo, mid, left, out);
  isolate(chain, h, mid, hi, roots - left, out);
}

}  // namespace

SignChangeReport sturm_sign_changes(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero())
    throw ZeroPolynomialError("sturm_sign_changes: sign changes of the zero polynomial "
                              "are undefined");
  if (!(a < b)) throw std::invalid_argument("sturm_sign_changes: requires a < b");

  SignChangeReport rep;
  Poly h = odd_multiplicity_part(p);
  // Boundary roots are not interior sign changes.
  Poly at_a = Poly::monomial(1) - Poly(a);
  Poly at_b = Poly::monomial(1) - Poly(b);
  while (!h.is_constant() && h(a).is_zero()) h = Poly::divmod(h, at_a).first;
  while (!h.is_constant() && h(b).is_zero()) h = Poly::divmod(h, at_b).first;
  if (h.is_constant()) return rep;

  auto chain = sturm_chain(h);
  rep.count = variations(chain, a) - variations(chain, b);
  isolate(chain, h, a, b, rep.count, rep.locations);
  return rep;
}

MomentPropagationReport moment_propagation_check(const Poly& f, int n, int Kmax) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("moment_propagation_check: n must be even and positive");
  if (Kmax < 2) throw std::invalid_argument("moment_propagation_check: Kmax must be >= 2");

  MomentPropagationReport rep;
  rep.split = even_odd_split(f);

  // Zero even part changes sign nowhere; the hypothesis holds vacuously.
  if (!rep.split.p.is_zero())
    rep.sign_changes = sturm_sign_changes(rep.split.p, Rational(0), Rational(1));
  rep.sign_changes.ratio_params = LevelRatioParams{n, f};
  if (rep.sign_changes.count > 2) {
    std::ostringstream os;
    os << "even part changes sign " << rep.sign_changes.count << " times on (0,1)";
    throw HypothesisFailedError("sign-change bound", os.str());
  }

  PolyAbelSystem sys(f, Poly::monomial(n - 1));
  Poly G = g_primitive(sys);
  Poly Gk = Poly(Rational(1));
  for (int k = 0; k <= Kmax; ++k) {
    if (k > 0) Gk = Gk * G;
    rep.moments.push_back((f * Gk).definite_integral(sys.a, sys.b));
  }
  for (int k = 0; k <= 2; ++k) {
    if (!rep.moments[static_cast<size_t>(k)].is_zero()) {
      std::ostringstream os;
      os << "m_" << k << " = " << rep.moments[static_cast<size_t>(k)] << " is nonzero";
      throw HypothesisFailedError("vanishing of the first three moments", os.str());
    }
  }
  for (int k = 3; k <= Kmax; ++k) {
    if (!rep.moments[static_cast<size_t>(k)].is_zero()) {
      std::ostringstream os;
      os << "moment propagation violated at k = " << k << " (m_k = "
         << rep.moments[static_cast<size_t>(k)] << ")";
      throw std::logic_error(os.str());
    }
  }
  return rep;
}

}  // namespace abel
