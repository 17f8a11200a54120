#pragma once

#include <stdexcept>
#include <variant>

#include "abel/errors.hpp"
#include "abel/poly.hpp"
#include "abel/rational.hpp"
#include "abel/trigpoly.hpp"

namespace abel {

/// x' = f(t) x^3 + g(t) x^2 with polynomial coefficients on [a, b].
struct PolyAbelSystem {
  Poly f;
  Poly g;
  Rational a{-1};
  Rational b{1};

  PolyAbelSystem() = default;
  PolyAbelSystem(Poly f_, Poly g_, Rational a_ = Rational(-1), Rational b_ = Rational(1))
      : f(std::move(f_)), g(std::move(g_)), a(std::move(a_)), b(std::move(b_)) {
    if (!(a < b)) throw std::invalid_argument("PolyAbelSystem: requires a < b");
  }
};

/// Same equation with trigonometric-polynomial coefficients on [0, 2*pi].
struct TrigAbelSystem {
  TrigPoly f;
  TrigPoly g;
};

enum class SystemKind { Polynomial, Trigonometric };

/// Tagged union over the two coefficient classes. Accessors throw
/// InvalidKindError on a kind mismatch so callers fail fast.
class AbelSystem {
public:
  AbelSystem(PolyAbelSystem s) : v_(std::move(s)) {}
  AbelSystem(TrigAbelSystem s) : v_(std::move(s)) {}

  SystemKind kind() const {
    return std::holds_alternative<PolyAbelSystem>(v_) ? SystemKind::Polynomial
                                                      : SystemKind::Trigonometric;
  }
  bool is_poly() const { return kind() == SystemKind::Polynomial; }
  bool is_trig() const { return kind() == SystemKind::Trigonometric; }

  const PolyAbelSystem& poly() const {
    if (!is_poly()) throw InvalidKindError("expected a polynomial system");
    return std::get<PolyAbelSystem>(v_);
  }
  const TrigAbelSystem& trig() const {
    if (!is_trig()) throw InvalidKindError("expected a trigonometric system");
    return std::get<TrigAbelSystem>(v_);
  }

private:
  std::variant<PolyAbelSystem, TrigAbelSystem> v_;
};

}  // namespace abel
