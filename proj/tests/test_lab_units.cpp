#include <cmath>
#include <numbers>

#include "bosescatter/lab_units.hpp"
#include "doctest.h"

using namespace bosescatter;

TEST_CASE("scaled photon momentum") {
  const LabParameters rb87(87.0 * constants::atomic_mass_unit, 780e-9, 100e-9);
  CHECK(scaled_photon_momentum(rb87) == doctest::Approx(1.90).epsilon(0.02 / 1.90));

  // k -> 0 for long wavelengths.
  const LabParameters long_wave(87.0 * constants::atomic_mass_unit, 1.0, 100e-9);
  CHECK(scaled_photon_momentum(long_wave) < 1e-5);

  // Quadrupling T_c halves k.
  const LabParameters hot(87.0 * constants::atomic_mass_unit, 780e-9, 400e-9);
  CHECK(scaled_photon_momentum(hot) ==
        doctest::Approx(0.5 * scaled_photon_momentum(rb87)).epsilon(1e-12));

  CHECK_THROWS_AS(LabParameters(-1.0, 780e-9, 1e-7), std::domain_error);
  CHECK_THROWS_AS(LabParameters(1e-25, 0.0, 1e-7), std::domain_error);
  CHECK_THROWS_AS(LabParameters(1e-25, 780e-9, -1.0), std::domain_error);
}

TEST_CASE("delta from angle") {
  // Small-angle limit Delta -> theta k.
  const double k = 1.9;
  CHECK(delta_from_angle(1e-6, k) / (1e-6 * k) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(delta_from_angle(std::numbers::pi / 2, 1.0) ==
        doctest::Approx(1.41421).epsilon(1e-5 / 1.41421));
  CHECK_THROWS_AS(delta_from_angle(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(delta_from_angle(4.0, 1.0), std::domain_error);

  // Strictly increasing, and Delta/k independent of k.
  double prev = 0.0;
  for (double theta = 0.05; theta < std::numbers::pi; theta += 0.05) {
    const double cur = delta_from_angle(theta, k);
    CHECK(cur > prev);
    CHECK(cur / k == doctest::Approx(delta_from_angle(theta, 3.7) / 3.7).epsilon(1e-12));
    prev = cur;
  }

  // Round-trip with the inverse.
  for (double theta = 1e-4; theta <= 3.0; theta *= 1.8) {
    const double delta = delta_from_angle(theta, k);
    CHECK(angle_from_delta(delta, k) == doctest::Approx(theta).epsilon(1e-10));
  }
  CHECK_THROWS_AS(angle_from_delta(2.1 * k, k), std::domain_error);
}

TEST_CASE("polarization factor") {
  for (auto mode :
       {PolarizationMode::in_plane, PolarizationMode::perpendicular, PolarizationMode::unpolarized})
    CHECK(polarization_factor(0.0, mode) == 1.0);
  CHECK(polarization_factor(std::numbers::pi / 2, PolarizationMode::in_plane) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(polarization_factor(std::numbers::pi / 2, PolarizationMode::unpolarized) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(polarization_factor(-0.1, PolarizationMode::in_plane), std::domain_error);

  // Unpolarized = average of the two pure modes.
  for (double theta = 0.0; theta <= std::numbers::pi; theta += 0.1) {
    const double avg = 0.5 * (polarization_factor(theta, PolarizationMode::in_plane) +
                              polarization_factor(theta, PolarizationMode::perpendicular));
    CHECK(polarization_factor(theta, PolarizationMode::unpolarized) ==
          doctest::Approx(avg).epsilon(1e-14));
  }

  CHECK(polarization_mode_from_string("in_plane") == PolarizationMode::in_plane);
  CHECK_THROWS_AS(polarization_mode_from_string("circular"), std::domain_error);
}

TEST_CASE("heating reduction factor") {
  const QuadratureConfig config;
  CHECK(heating_reduction_factor(ScaledPoint(0.5, 1.2), ScaledPoint(0.5, 1.2), config) == 1.0);

  // Small-angle detection below T_c versus a ~90 degree reference.
  const double k = 1.9021;
  const double wide = delta_from_angle(std::numbers::pi / 2, k);
  CHECK(heating_reduction_factor(ScaledPoint(0.1, 0.85), ScaledPoint(wide, 0.85), config) >= 50.0);

  CHECK_THROWS_AS(
      heating_reduction_factor(ScaledPoint(0.1, 0.8), ScaledPoint(1.0, 0.9), config),
      std::domain_error);
}
