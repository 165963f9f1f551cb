#ifndef BOSESCATTER_LAB_UNITS_HPP
#define BOSESCATTER_LAB_UNITS_HPP

#include <stdexcept>
#include <string>

#include "bosescatter/scattering.hpp"

namespace bosescatter {

// CODATA 2018 exact SI values.
namespace constants {
inline constexpr double planck = 6.62607015e-34;          // J s
inline constexpr double hbar = 1.054571817e-34;           // J s (h / 2pi, rounded)
inline constexpr double boltzmann = 1.380649e-23;         // J / K
inline constexpr double speed_of_light = 299792458.0;     // m / s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
}  // namespace constants

struct LabParameters {
  double atom_mass;             // kg
  double wavelength;            // m
  double critical_temperature;  // K

  LabParameters(double atom_mass_, double wavelength_, double critical_temperature_)
      : atom_mass(atom_mass_), wavelength(wavelength_), critical_temperature(critical_temperature_) {
    if (!(atom_mass > 0.0)) throw std::domain_error("atom mass must be positive");
    if (!(wavelength > 0.0)) throw std::domain_error("wavelength must be positive");
    if (!(critical_temperature > 0.0))
      throw std::domain_error("critical temperature must be positive");
  }
};

enum class PolarizationMode { in_plane, perpendicular, unpolarized };

PolarizationMode polarization_mode_from_string(const std::string& s);
const char* to_string(PolarizationMode mode);

// Photon momentum h/wavelength in the natural momentum unit
// sqrt(m k_B T_c); dimensionless.
double scaled_photon_momentum(const LabParameters& params);

// Momentum transfer Delta = (sin theta / cos(theta/2)) k for scattering
// angle theta in (0, pi].  Strictly increasing in theta.
double delta_from_angle(double theta, double k);

// Small-angle form theta * k.
double delta_from_angle_small(double theta, double k);

// Numeric inverse of delta_from_angle on (0, pi); round-trips to 1e-10.
double angle_from_delta(double delta, double k);

// Rayleigh polarization factor: cos^2 theta in-plane, 1 perpendicular,
// (1 + cos^2 theta)/2 unpolarized.
double polarization_factor(double theta, PolarizationMode mode);

// Ratio total_rate(small) / total_rate(reference): the factor by which the
// incident intensity (hence isotropic heating) can be cut at equal signal
// by moving the detector to the small angle.  Both points must share tau.
double heating_reduction_factor(const ScaledPoint& small_point, const ScaledPoint& reference_point,
                                const QuadratureConfig& config);

}  // namespace bosescatter

#endif
