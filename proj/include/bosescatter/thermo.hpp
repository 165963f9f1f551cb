#ifndef BOSESCATTER_THERMO_HPP
#define BOSESCATTER_THERMO_HPP

#include "bosescatter/bose_math.hpp"
#include "bosescatter/config.hpp"

namespace bosescatter {

// Critical density in scaled momentum units.  See DensityConvention.
double critical_density(DensityConvention convention = DensityConvention::integral);

// Condensate fraction N0(tau)/N_total = max(0, 1 - tau^{3/2}).
double condensate_fraction(double tau);

// Fugacity fixed by holding the total density at its critical value:
// exactly 1 for tau <= 1; for tau > 1 the unique root of
// g_{3/2}(lambda) = zeta(3/2) tau^{-3/2}, solved to residual <= 1e-10.
Fugacity fugacity(double tau);

// Quadratic near-critical expansion
//   lambda ~= 1 - (9/16pi) [zeta(3/2)]^2 (tau-1)^2,  tau >= 1.
// Cross-check and root-finder seed only.
Fugacity near_critical_expansion(double tau);

// Immutable equilibrium snapshot at a given tau.
struct ThermoState {
  double tau;
  Fugacity fugacity;
  double condensate_fraction;
  double n_total;

  static ThermoState at(double tau, DensityConvention convention = DensityConvention::integral);
};

}  // namespace bosescatter

#endif
