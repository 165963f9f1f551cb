#include <cmath>
#include <random>

#include "bosescatter/bose_math.hpp"
#include "doctest.h"

using namespace bosescatter;

TEST_CASE("zeta(3/2)") {
  CHECK(zeta_three_halves() == doctest::Approx(2.61).epsilon(0.005 / 2.61));
  // Independent series oracle: sum to N with integral tail bracket.
  const int n = 400000;
  double lo = 0.0;
  for (int i = n; i >= 1; --i) lo += std::pow(static_cast<double>(i), -1.5);
  const double hi = lo + 2.0 / std::sqrt(static_cast<double>(n));
  lo += 2.0 / std::sqrt(static_cast<double>(n + 1));
  CHECK(zeta_three_halves() >= lo);
  CHECK(zeta_three_halves() <= hi);
  CHECK(zeta_three_halves() == doctest::Approx(2.612375348685).epsilon(1e-12));
  CHECK(polylog_g32(1.0) == doctest::Approx(zeta_three_halves()).epsilon(1e-12));
}

TEST_CASE("polylog g_{3/2}") {
  CHECK(polylog_g32(0.0) == 0.0);
  CHECK(polylog_g32(1.0) == zeta_three_halves());
  // Direct series to n = 50 with tail bound, independent of the library path.
  double ref = 0.0;
  for (int n = 1; n <= 50; ++n) ref += std::pow(0.5, n) * std::pow(static_cast<double>(n), -1.5);
  CHECK(polylog_g32(0.5) == doctest::Approx(ref).epsilon(1e-10));
  CHECK(polylog_g32(0.5) == doctest::Approx(0.62483).epsilon(1e-4 / 0.62483));

  CHECK_THROWS_AS(polylog_g32(-0.1), std::domain_error);
  CHECK_THROWS_AS(polylog_g32(1.1), std::domain_error);
}

TEST_CASE("g_{3/2} is strictly increasing") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double a = u(rng), b = u(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(polylog_g32(a) < polylog_g32(b));
  }
}

TEST_CASE("occupation factor") {
  const Fugacity one(1.0);
  CHECK(occupation(1e4, 1.0, one) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(occupation(2.0 * 1.3 * std::log(2.0), 1.3, one) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(occupation(0.01, 1.0, one) == doctest::Approx(199.50).epsilon(0.01 / 199.5));
  CHECK(occupation(1.0, 2.0, Fugacity(0.0)) == 0.0);

  CHECK_THROWS_AS(occupation(0.0, 1.0, one), std::domain_error);
  CHECK_THROWS_AS(occupation(1.0, -1.0, one), std::domain_error);
  CHECK_THROWS_AS(Fugacity(1.5), std::domain_error);
  CHECK_THROWS_AS(Fugacity(-0.1), std::domain_error);

  // Monotone decreasing in p^2.
  double prev = occupation(1e-6, 0.7, Fugacity(0.9));
  for (double p2 = 0.1; p2 < 10.0; p2 += 0.1) {
    const double cur = occupation(p2, 0.7, Fugacity(0.9));
    CHECK(cur < prev);
    CHECK(cur >= 0.0);
    prev = cur;
  }
}

TEST_CASE("small-p divergence at lambda = 1") {
  const double tau = 0.9;
  const double p2 = 1e-8;
  CHECK(p2 * occupation(p2, tau, Fugacity(1.0)) ==
        doctest::Approx(2.0 * tau).epsilon(1e-3));
}
