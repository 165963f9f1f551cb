#include "bosescatter/lab_units.hpp"

#include <cmath>
#include <numbers>

namespace bosescatter {

PolarizationMode polarization_mode_from_string(const std::string& s) {
  if (s == "in_plane") return PolarizationMode::in_plane;
  if (s == "perpendicular") return PolarizationMode::perpendicular;
  if (s == "unpolarized") return PolarizationMode::unpolarized;
  throw std::domain_error("unknown polarization mode '" + s +
                          "' (expected in_plane|perpendicular|unpolarized)");
}

const char* to_string(PolarizationMode mode) {
  switch (mode) {
    case PolarizationMode::in_plane: return "in_plane";
    case PolarizationMode::perpendicular: return "perpendicular";
    default: return "unpolarized";
  }
}

double scaled_photon_momentum(const LabParameters& params) {
  const double photon_momentum = constants::planck / params.wavelength;
  const double momentum_unit =
      std::sqrt(params.atom_mass * constants::boltzmann * params.critical_temperature);
  return photon_momentum / momentum_unit;
}

double delta_from_angle(double theta, double k) {
  if (!(theta > 0.0) || theta > std::numbers::pi)
    throw std::domain_error("delta_from_angle: theta must lie in (0, pi]");
  if (!(k > 0.0)) throw std::domain_error("delta_from_angle: k must be positive");
  return std::sin(theta) / std::cos(0.5 * theta) * k;
}

double delta_from_angle_small(double theta, double k) { return theta * k; }

double angle_from_delta(double delta, double k) {
  if (!(delta > 0.0)) throw std::domain_error("angle_from_delta: delta must be positive");
  if (!(k > 0.0)) throw std::domain_error("angle_from_delta: k must be positive");
  // sin(theta)/cos(theta/2) = 2 sin(theta/2), so the inverse is closed form.
  const double s = delta / (2.0 * k);
  if (s > 1.0) throw std::domain_error("angle_from_delta: delta exceeds the backscattering maximum 2k");
  return 2.0 * std::asin(s);
}

double polarization_factor(double theta, PolarizationMode mode) {
  if (!(theta >= 0.0) || theta > std::numbers::pi)
    throw std::domain_error("polarization_factor: theta must lie in [0, pi]");
  const double c = std::cos(theta);
  switch (mode) {
    case PolarizationMode::in_plane: return c * c;
    case PolarizationMode::perpendicular: return 1.0;
    default: return 0.5 * (1.0 + c * c);
  }
}

double heating_reduction_factor(const ScaledPoint& small_point, const ScaledPoint& reference_point,
                                const QuadratureConfig& config) {
  if (small_point.tau != reference_point.tau)
    throw std::domain_error("heating_reduction_factor: both points must share the same tau");
  const double r_small = total_rate(small_point, config).total;
  const double r_ref = total_rate(reference_point, config).total;
  return r_small / r_ref;
}

}  // namespace bosescatter
