#include "abel/planar.hpp"

#include <stdexcept>

namespace abel {

TrigPoly trig_expand_homogeneous(const std::vector<Rational>& coeffs, int n) {
  if (n < 0 || coeffs.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("trig_expand_homogeneous: need n+1 coefficients");

  std::vector<TrigPoly> cp{TrigPoly::constant(Rational(1))}, sp{TrigPoly::constant(Rational(1))};
  for (int i = 1; i <= n; ++i) {
    cp.push_back(cp.back() * TrigPoly::cos_harmonic(1));
    sp.push_back(sp.back() * TrigPoly::sin_harmonic(1));
  }
  TrigPoly acc;
  for (int j = 0; j <= n; ++j)
    acc += coeffs[static_cast<size_t>(j)] * (cp[static_cast<size_t>(n - j)] * sp[static_cast<size_t>(j)]);
  return acc;
}

AbelSystem cherkas_reduce(const PlanarSystem& sys) {
  if (sys.n < 2) throw std::invalid_argument("cherkas_reduce: n must be >= 2");
  if (sys.P.size() != static_cast<size_t>(sys.n) + 1 ||
      sys.Q.size() != static_cast<size_t>(sys.n) + 1)
    throw std::invalid_argument("cherkas_reduce: coefficient lists must have length n+1");

  TrigPoly Pn = trig_expand_homogeneous(sys.P, sys.n);
  TrigPoly Qn = trig_expand_homogeneous(sys.Q, sys.n);
  TrigPoly c = TrigPoly::cos_harmonic(1);
  TrigPoly s = TrigPoly::sin_harmonic(1);

  TrigPoly A = c * Pn + s * Qn;
  TrigPoly B = c * Qn - s * Pn;
  Rational nm1(sys.n - 1);

  TrigAbelSystem out;
  out.f = -(nm1 * (A * B));
  out.g = nm1 * A - B.derivative();
  return AbelSystem(out);
}

}  // namespace abel
