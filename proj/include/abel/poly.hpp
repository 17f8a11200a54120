#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abel/rational.hpp"

namespace abel {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree order. Invariant: the highest stored coefficient is nonzero; the
/// zero polynomial stores no coefficients at all and reports degree() as
/// nullopt (an explicit "minus infinity", never -1).
class Poly {
public:
  Poly() = default;
  explicit Poly(Rational constant);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly variable() { return monomial(1); }
  static Poly monomial(int degree, Rational coeff = Rational(1));

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const;
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of t^k; zero beyond the stored range.
  Rational coeff(int k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  Poly derivative() const;
  /// The primitive P with P' = *this and P(a) = 0, exact.
  Poly antiderivative_from(const Rational& a) const;
  Rational definite_integral(const Rational& a, const Rational& b) const;

  /// this∘inner, evaluated Horner-style in inner.
  Poly compose(const Poly& inner) const;
  Poly pow(int k) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator-(const Poly& p);
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder of a by b, deg(rem) < deg(b). Exact over the
  /// rationals. Throws std::domain_error when b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic greatest common divisor (zero when both inputs are zero).
  static Poly gcd(const Poly& a, const Poly& b);

  /// Human-readable form like "t^2 - 1/2*t + 3".
  std::string str(const std::string& var = "t") const;

private:
  void normalize();
  std::vector<Rational> c_;
};

/// Yun square-free decomposition: returns monic pairwise-coprime square-free
/// factors with their multiplicities, so p = lc * prod f_i^{m_i}.
/// Constant polynomials decompose into an empty list.
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p);

/// Product of the square-free factors of odd multiplicity (monic); the sign
/// changes of p are exactly the real roots of this part.
Poly odd_multiplicity_part(const Poly& p);

}  // namespace abel
