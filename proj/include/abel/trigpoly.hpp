#pragma once

#include <string>
#include <vector>

#include "abel/rational.hpp"

namespace abel {

/// Finite Fourier sum c0 + sum_k (a_k cos k*theta + b_k sin k*theta) with
/// exact rational coefficients. The highest stored harmonic has at least one
/// nonzero coefficient; the zero element stores nothing.
///
/// Products expand through the product-to-sum identities, so the class is
/// closed under ring operations. Primitives exist only for mean-zero inputs
/// (otherwise a linear theta term would leave the class).
class TrigPoly {
public:
  TrigPoly() = default;
  TrigPoly(Rational constant, std::vector<Rational> cos_coeffs,
           std::vector<Rational> sin_coeffs);

  static TrigPoly constant(Rational c);
  static TrigPoly cos_harmonic(int k, Rational c = Rational(1));
  static TrigPoly sin_harmonic(int k, Rational c = Rational(1));

  bool is_zero() const { return const_.is_zero() && cos_.empty() && sin_.empty(); }
  /// Highest harmonic index (0 for constants and for the zero element).
  int degree() const;

  const Rational& constant_term() const { return const_; }
  const std::vector<Rational>& cos_coeffs() const { return cos_; }
  const std::vector<Rational>& sin_coeffs() const { return sin_; }
  /// Coefficient of cos(k*theta), k >= 1; zero beyond the stored range.
  Rational cos_coeff(int k) const;
  Rational sin_coeff(int k) const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const Rational& s, const TrigPoly& p);
  friend TrigPoly operator-(const TrigPoly& p);
  TrigPoly& operator+=(const TrigPoly& o) { *this = *this + o; return *this; }
  TrigPoly& operator*=(const TrigPoly& o) { *this = *this * o; return *this; }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.const_ == b.const_ && a.cos_ == b.cos_ && a.sin_ == b.sin_;
  }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

  /// Term-wise derivative: cos k -> -k sin k, sin k -> k cos k.
  TrigPoly derivative() const;

  /// The primitive P with P' = *this and P(0) = 0. Throws NonZeroMeanError
  /// when the constant term is nonzero (the primitive would contain a
  /// linear theta term and leave the class).
  TrigPoly antiderivative_from_zero() const;

  /// q such that the integral over [0, 2*pi] equals q*pi (namely 2*constant).
  Rational integral_over_period() const;

  double eval(double theta) const;
  TrigPoly pow(int k) const;

  std::string str() const;

private:
  void normalize();
  Rational const_;
  std::vector<Rational> cos_;  // index k-1 holds the cos(k*theta) coefficient
  std::vector<Rational> sin_;
};

}  // namespace abel
