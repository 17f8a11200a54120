#include "abel/moments.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace abel {

Poly f_primitive(const PolyAbelSystem& sys) { return sys.f.antiderivative_from(sys.a); }
Poly g_primitive(const PolyAbelSystem& sys) { return sys.g.antiderivative_from(sys.a); }
TrigPoly f_primitive(const TrigAbelSystem& sys) { return sys.f.antiderivative_from_zero(); }
TrigPoly g_primitive(const TrigAbelSystem& sys) { return sys.g.antiderivative_from_zero(); }

std::string MomentValue::str() const {
  if (value.is_zero()) return "0";
  if (times_pi) return value.compact_str() + "*pi";
  return value.compact_str();
}

MomentValue moment(const AbelSystem& sys, int k) {
  if (k < 0) throw std::invalid_argument("moment: k must be >= 0");
  if (sys.is_poly()) {
    const auto& s = sys.poly();
    Poly G = g_primitive(s);
    return {(s.f * G.pow(k)).definite_integral(s.a, s.b), false};
  }
  const auto& s = sys.trig();
  TrigPoly G = g_primitive(s);
  return {(s.f * G.pow(k)).integral_over_period(), true};
}

MomentReport moment_report(const AbelSystem& sys, int K) {
  if (K < 2) throw std::invalid_argument("moment_report: K must be >= 2");
  MomentReport rep;
  if (sys.is_poly()) {
    const auto& s = sys.poly();
    rep.g_integral = {s.g.definite_integral(s.a, s.b), false};
    Poly G = g_primitive(s);
    Poly Gk = Poly::monomial(0, Rational(1));
    for (int k = 0; k <= K; ++k) {
      if (k > 0) Gk = Gk * G;
      rep.moments.push_back({(s.f * Gk).definite_integral(s.a, s.b), false});
    }
  } else {
    const auto& s = sys.trig();
    rep.g_integral = {s.g.integral_over_period(), true};
    TrigPoly G = g_primitive(s);
    TrigPoly Gk = TrigPoly::constant(Rational(1));
    for (int k = 0; k <= K; ++k) {
      if (k > 0) Gk = Gk * G;
      rep.moments.push_back({(s.f * Gk).integral_over_period(), true});
    }
  }
  for (size_t k = 0; k < rep.moments.size(); ++k) {
    if (!rep.moments[k].is_zero()) {
      rep.first_nonzero_index = static_cast<int>(k);
      break;
    }
  }
  return rep;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Rational factorial(int k) {
  mpz_class acc = 1;
  for (int i = 2; i <= k; ++i) acc *= i;
  return Rational(acc, mpz_class(1));
}

Rational determinant(Matrix m) {
  size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational factor = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> kernel_basis(Matrix m, size_t cols) {
  size_t rows = m.size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = inv * m[r][j];
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational factor = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_c] = Rational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

MomentLinearSystem moment_linear_system(int n, std::vector<int> even_degrees,
                                        std::vector<int> moment_indices) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("moment_linear_system: n must be even and positive");
  for (int d : even_degrees)
    if (d < 0 || d % 2 != 0)
      throw std::invalid_argument("moment_linear_system: degrees must be even and nonnegative");
  for (int k : moment_indices)
    if (k < 0) throw std::invalid_argument("moment_linear_system: moment indices must be >= 0");

  // G = (t^n - 1)/n, the primitive of t^{n-1} vanishing at -1 (n even).
  Poly G = Poly::monomial(n, Rational(1, n)) + Poly::monomial(0, Rational(-1, n));

  // The published form of the system divides the k-th moment equation by
  // 2 (-1)^k k!; that scaling is defined for the canonical configuration
  // only, so other configurations get the raw integrals.
  bool canonical = even_degrees == std::vector<int>{0, 2, 4} &&
                   moment_indices == std::vector<int>{0, 1, 2};

  MomentLinearSystem out;
  out.moment_indices = moment_indices;
  out.even_degrees = even_degrees;
  for (int k : moment_indices) {
    Poly Gk = G.pow(k);
    Rational scale(1);
    if (canonical) scale = Rational(1) / (Rational(k % 2 == 0 ? 2 : -2) * factorial(k));
    std::vector<Rational> row;
    for (int d : even_degrees) {
      Rational mu = (Poly::monomial(d, Rational(1)) * Gk).definite_integral(Rational(-1), Rational(1));
      row.push_back(scale * mu);
    }
    out.matrix.push_back(std::move(row));
  }
  if (!out.matrix.empty() && out.matrix.size() == even_degrees.size())
    out.det = determinant(out.matrix);
  out.kernel = out.matrix.empty()
                   ? std::vector<std::vector<Rational>>{}
                   : kernel_basis(out.matrix, even_degrees.size());
  return out;
}

std::pair<Rational, Rational> f_primitive_identity(const PolyAbelSystem& sys) {
  Poly F = f_primitive(sys);
  Rational lhs = (sys.f * F).definite_integral(sys.a, sys.b);
  Rational Fb = F(sys.b), Fa = F(sys.a);
  Rational rhs = (Fb * Fb - Fa * Fa) / Rational(2);
  return {lhs, rhs};
}

}  // namespace abel
