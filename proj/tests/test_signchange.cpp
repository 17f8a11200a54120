#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "abel/signchange.hpp"
#include "test_support.hpp"

using abel::EvenOddSplit;
using abel::Poly;
using abel::Rational;
using testsupport::random_nonzero_poly;
using testsupport::random_odd_poly;
using testsupport::random_poly;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly linear_root(long num, long den) {
  return Poly(std::vector<Rational>{Rational(-num, den), Rational(1)});
}

// Grid-sampling oracle: count sign flips of p over (a, b), skipping zeros.
int sampled_sign_changes(const Poly& p, double a, double b, int samples) {
  int flips = 0, prev = 0;
  for (int i = 1; i < samples; ++i) {
    double x = a + (b - a) * i / samples;
    double v = p.eval_double(x);
    int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++flips;
    prev = sg;
  }
  return flips;
}

}  // namespace

TEST_SUITE("signchange") {

TEST_CASE("even-odd split") {
  auto s1 = abel::even_odd_split(from_ints({3, 5, 7}));
  CHECK(s1.p == from_ints({3, 7}));
  CHECK(s1.q == Poly(Rational(5)));

  auto s2 = abel::even_odd_split(from_ints({0, -1, 0, 1}));
  CHECK(s2.p.is_zero());
  CHECK(s2.q == from_ints({-1, 1}));

  auto s3 = abel::even_odd_split(from_ints({0, 1, -1, 0, 1}));
  CHECK(s3.p == from_ints({0, -1, 1}));
  CHECK(s3.q == Poly(Rational(1)));

  auto s4 = abel::even_odd_split(Poly());
  CHECK(s4.p.is_zero());
  CHECK(s4.q.is_zero());

  std::mt19937 rng(3001);
  for (int rep = 0; rep < 200; ++rep) {
    Poly f = random_poly(rng, 9);
    auto [p, q] = abel::even_odd_split(f);
    Poly sq = Poly::monomial(2);
    CHECK(p.compose(sq) + Poly::variable() * q.compose(sq) == f);
  }
}

TEST_CASE("level ratio evaluation") {
  Poly one(Rational(1));
  CHECK(abel::level_ratio_eval(one, 2, Rational(-1, 4)) ==
        doctest::Approx(2.8284271247461903).epsilon(1e-12));
  CHECK(abel::level_ratio_eval(Poly::monomial(2), 2, Rational(0)) == doctest::Approx(2.0));

  std::mt19937 rng(3002);
  Poly odd = random_odd_poly(rng, 7);
  for (int i = 0; i <= 4; ++i) {
    Rational u = Rational(-1, 2) + Rational(i, 8);
    CHECK(abel::level_ratio_eval(odd, 2, u) == 0.0);
  }

  CHECK_THROWS_AS(abel::level_ratio_eval(one, 2, Rational(1, 10)), abel::DomainError);
  CHECK_THROWS_AS(abel::level_ratio_eval(one, 2, Rational(-3, 4)), abel::DomainError);
  CHECK_THROWS_AS(abel::level_ratio_eval(one, 3, Rational(0)), std::invalid_argument);

  // Singular endpoint: the limit sign of the even part at 0.
  CHECK(abel::level_ratio_eval(one, 2, Rational(-1, 2)) ==
        std::numeric_limits<double>::infinity());
  CHECK(abel::level_ratio_eval(Poly(Rational(-3)), 4, Rational(-1, 4)) ==
        -std::numeric_limits<double>::infinity());
  CHECK(abel::level_ratio_eval(Poly::monomial(2), 2, Rational(-1, 2)) == 0.0);
}

TEST_CASE("level ratio carries the sign of the even part") {
  std::mt19937 rng(3003);
  for (int n : {2, 4}) {
    for (int rep = 0; rep < 5; ++rep) {
      Poly f = random_nonzero_poly(rng, 6);
      Poly p = abel::even_odd_split(f).p;
      for (int i = 1; i < 50; ++i) {
        Rational u = Rational(-1, n) + Rational(i, 50 * n);
        double psi = abel::level_ratio_eval(f, n, u);
        double s = 1.0 + n * u.to_double();
        double pv = p.eval_double(std::pow(s, 2.0 / n));
        if (std::abs(pv) < 1e-9 || std::abs(psi) < 1e-9) continue;
        CHECK((psi > 0) == (pv > 0));
      }
    }
  }
}

TEST_CASE("sign change counting on pinned polynomials") {
  Poly two_roots = linear_root(1, 4) * linear_root(3, 4);
  auto rep = abel::sturm_sign_changes(two_roots, Rational(0), Rational(1));
  CHECK(rep.count == 2);
  REQUIRE(rep.locations.size() == 2);
  CHECK(rep.locations[0].first == Rational(0));
  CHECK(rep.locations[0].second == Rational(1, 2));
  CHECK(rep.locations[1].first == Rational(1, 2));
  CHECK(rep.locations[1].second == Rational(1));

  Poly squared = linear_root(1, 2) * linear_root(1, 2);
  CHECK(abel::sturm_sign_changes(squared, Rational(0), Rational(1)).count == 0);

  Poly mixed = linear_root(1, 4) * squared * linear_root(3, 4);
  CHECK(abel::sturm_sign_changes(mixed, Rational(0), Rational(1)).count == 2);

  Poly cubed = linear_root(1, 4) * linear_root(1, 4) * linear_root(1, 4) * linear_root(3, 4);
  CHECK(abel::sturm_sign_changes(cubed, Rational(0), Rational(1)).count == 2);

  // Boundary roots are not interior sign changes.
  CHECK(abel::sturm_sign_changes(Poly::variable(), Rational(0), Rational(1)).count == 0);
  CHECK(abel::sturm_sign_changes(linear_root(1, 1), Rational(0), Rational(1)).count == 0);
  CHECK(abel::sturm_sign_changes(Poly(Rational(5)), Rational(0), Rational(1)).count == 0);

  // Exact rational roots surface as degenerate isolating pairs.
  Poly exact = linear_root(1, 4) * linear_root(1, 2);
  auto degenerate = abel::sturm_sign_changes(exact, Rational(0), Rational(1));
  CHECK(degenerate.count == 2);
  REQUIRE(degenerate.locations.size() == 2);
  CHECK(degenerate.locations[0] == std::pair<Rational, Rational>{Rational(1, 4), Rational(1, 4)});
  CHECK(degenerate.locations[1] == std::pair<Rational, Rational>{Rational(1, 2), Rational(1, 2)});

  // Irrational root on a shifted interval.
  auto shifted = abel::sturm_sign_changes(from_ints({-2, 0, 1}), Rational(0), Rational(2));
  CHECK(shifted.count == 1);
  REQUIRE(shifted.locations.size() == 1);
  CHECK(shifted.locations[0].first < shifted.locations[0].second);
  CHECK(from_ints({-2, 0, 1})(shifted.locations[0].first).sign() !=
        from_ints({-2, 0, 1})(shifted.locations[0].second).sign());

  CHECK_THROWS_AS(abel::sturm_sign_changes(Poly(), Rational(0), Rational(1)),
                  abel::ZeroPolynomialError);
  CHECK_THROWS_AS(abel::sturm_sign_changes(Poly::variable(), Rational(1), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("sign change counts match a dense sampling oracle") {
  std::mt19937 rng(3004);
  int tested = 0;
  while (tested < 20) {
    Poly p = random_nonzero_poly(rng, 6);
    Poly sf = Poly(Rational(1));
    for (const auto& [factor, mult] : abel::square_free_decomposition(p)) {
      (void)mult;
      sf = sf * factor;
    }
    if (sf.is_constant()) continue;
    ++tested;
    auto rep = abel::sturm_sign_changes(sf, Rational(0), Rational(1));
    CHECK(rep.count == sampled_sign_changes(sf, 0.0, 1.0, 10000));
    CHECK(rep.locations.size() == static_cast<size_t>(rep.count));
    for (size_t i = 1; i < rep.locations.size(); ++i)
      CHECK(rep.locations[i - 1].second <= rep.locations[i].first);
  }
}

TEST_CASE("moment propagation for odd cubic coefficients") {
  auto rep = abel::moment_propagation_check(from_ints({0, -1, 0, 1}), 2, 20);
  CHECK(rep.split.p.is_zero());
  CHECK(rep.split.q == from_ints({-1, 1}));
  CHECK(rep.sign_changes.count == 0);
  REQUIRE(rep.moments.size() == 21);
  for (const Rational& m : rep.moments) CHECK(m.is_zero());
  REQUIRE(rep.sign_changes.ratio_params.has_value());
  CHECK(rep.sign_changes.ratio_params->n == 2);

  std::mt19937 rng(3005);
  for (int n : {2, 4}) {
    Poly f = random_odd_poly(rng, 9);
    auto r = abel::moment_propagation_check(f, n, 20);
    for (const Rational& m : r.moments) CHECK(m.is_zero());
  }
}

TEST_CASE("moment propagation hypothesis failures") {
  try {
    abel::moment_propagation_check(Poly(Rational(1)), 2, 5);
    FAIL("expected HypothesisFailedError");
  } catch (const abel::HypothesisFailedError& e) {
    CHECK(e.hypothesis() == "vanishing of the first three moments");
  }

  // Even part (s-1/5)(s-1/2)(s-4/5) changes sign three times on (0,1).
  Poly p = linear_root(1, 5) * linear_root(1, 2) * linear_root(4, 5);
  Poly f = p.compose(Poly::monomial(2));
  try {
    abel::moment_propagation_check(f, 2, 5);
    FAIL("expected HypothesisFailedError");
  } catch (const abel::HypothesisFailedError& e) {
    CHECK(e.hypothesis() == "sign-change bound");
  }

  CHECK_THROWS_AS(abel::moment_propagation_check(Poly::variable(), 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(abel::moment_propagation_check(Poly::variable(), 2, 1), std::invalid_argument);
}

}  // TEST_SUITE
