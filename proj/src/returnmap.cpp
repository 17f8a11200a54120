#include "abel/returnmap.hpp"

#include <stdexcept>

#include "abel/moments.hpp"

namespace abel {

ReturnMapSeries compute_return_series(const AbelSystem& sys, int N) {
  if (sys.is_trig())
    throw InvalidKindError("return-map series is computed for polynomial systems only");
  if (N < 2) throw std::invalid_argument("compute_return_series: N must be >= 2");
  const auto& s = sys.poly();

  // c[k] is the rho^k coefficient of x(t, rho); c[1] = 1.
  std::vector<Poly> c(static_cast<size_t>(N) + 1);
  c[1] = Poly(Rational(1));
  // t2[m] is the rho^m coefficient of x^2, filled as the c's become known.
  std::vector<Poly> t2(static_cast<size_t>(N) + 1);

  for (int m = 2; m <= N; ++m) {
    for (int i = 1; i <= m - 1; ++i) t2[m] += c[i] * c[m - i];
    Poly t3;  // rho^m coefficient of x^3 = x * x^2
    for (int i = 1; i <= m - 2; ++i) t3 += c[i] * t2[m - i];
    c[m] = (s.f * t3 + s.g * t2[m]).antiderivative_from(s.a);
  }

  ReturnMapSeries out;
  out.order = N;
  for (int k = 2; k <= N; ++k) {
    out.r.push_back(c[k]);
    out.endpoint_values.push_back(c[k](s.b));
  }
  out.h_coeffs.push_back(g_primitive(s)(s.b));
  out.h_coeffs.push_back(f_primitive(s)(s.b));
  for (int k = 2; k <= N; ++k)
    out.h_coeffs.push_back((s.f * c[k]).definite_integral(s.a, s.b));
  return out;
}

std::optional<int> center_order(const ReturnMapSeries& series) {
  for (size_t i = 0; i < series.endpoint_values.size(); ++i)
    if (!series.endpoint_values[i].is_zero()) return static_cast<int>(i) + 2;
  return std::nullopt;
}

std::vector<Rational> center_condition_integrals(const PolyAbelSystem& sys,
                                                 const ReturnMapSeries& series) {
  std::vector<Rational> out;
  out.push_back(sys.g.definite_integral(sys.a, sys.b));
  for (const Poly& rk : series.r) out.push_back((sys.f * rk).definite_integral(sys.a, sys.b));
  return out;
}

SeriesIdentityCheck series_integral_identities(const PolyAbelSystem& sys,
                                               const ReturnMapSeries& series) {
  if (series.order < 3)
    throw std::invalid_argument("series_integral_identities: needs order >= 3");
  Poly F = sys.f.antiderivative_from(sys.a);
  Poly G = sys.g.antiderivative_from(sys.a);
  auto integ = [&](const Poly& p) { return p.definite_integral(sys.a, sys.b); };

  SeriesIdentityCheck chk;
  chk.first = series.h_coeffs[1] == integ(sys.f);
  chk.second = integ(sys.f * series.rk(2)) == integ(sys.f * G);
  chk.third = integ(sys.f * series.rk(3)) == integ(sys.f * G * G) + integ(sys.f * F);
  return chk;
}

std::vector<Poly> series_residual(const PolyAbelSystem& sys, const ReturnMapSeries& series) {
  int N = series.order;
  std::vector<Poly> c(static_cast<size_t>(N) + 1);
  c[1] = Poly(Rational(1));
  for (int k = 2; k <= N; ++k) c[k] = series.rk(k);

  // Full convolutions from the finished coefficients, independent of the
  // incremental tables used during construction.
  std::vector<Poly> sq(static_cast<size_t>(N) + 1), cube(static_cast<size_t>(N) + 1);
  for (int m = 0; m <= N; ++m)
    for (int i = 1; i < m; ++i) sq[m] += c[i] * c[m - i];
  for (int m = 0; m <= N; ++m)
    for (int i = 1; i < m; ++i) cube[m] += c[i] * sq[m - i];

  std::vector<Poly> res(static_cast<size_t>(N) + 1);
  for (int m = 0; m <= N; ++m) {
    Poly deriv = (m >= 2) ? c[m].derivative() : Poly();
    res[m] = deriv - sys.f * cube[m] - sys.g * sq[m];
  }
  return res;
}

}  // namespace abel
