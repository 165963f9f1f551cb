#ifndef BOSESCATTER_ORACLE_HPP
#define BOSESCATTER_ORACLE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "bosescatter/scattering.hpp"

namespace bosescatter {

// Ground truth for the thermal-thermal term: eliminate p' with the
// delta-function and do a genuine radial x polar-angle adaptive quadrature,
// with no analytic angular step.
ValueWithError term2b_quadrature_3d(const ScaledPoint& point, const ThermoState& thermo,
                                    const QuadratureConfig& config);

struct MonteCarloResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Stochastic check of the same integral: p is importance-sampled from the
// radial Bose distribution via an inverse-CDF table, the scattering
// direction uniformly, and the occupation of the shifted state is the
// payload.  Bit-for-bit deterministic for a fixed seed.
MonteCarloResult term2b_monte_carlo(const ScaledPoint& point, const ThermoState& thermo,
                                    std::uint64_t samples, std::uint64_t seed);

// Finite momentum box: modes (i,j,k) in [-max_mode, max_mode]^3 with
// spacing 2 pi / box_scale, occupancies tuned so the box density matches
// the critical density.  Below tau = 1 the zero mode carries the
// condensate explicitly.
struct BoxModel {
  double box_scale = 0.0;
  int max_mode = 0;
  double tau = 0.0;
  Fugacity fugacity{1.0};
  double target_density = 0.0;
  double particle_count = 0.0;      // sum of occupancies
  double boundary_occupancy = 0.0;  // largest occupancy on the cutoff surface
  bool cutoff_warning = false;      // boundary occupancy exceeds 1e-12
  std::vector<double> occupancies;  // flattened (2M+1)^3, x fastest

  static BoxModel make(double box_scale, int max_mode, double tau,
                       DensityConvention convention = DensityConvention::integral);

  double mode_spacing() const { return 2.0 * 3.14159265358979323846 / box_scale; }
  int side() const { return 2 * max_mode + 1; }
  std::size_t index(int i, int j, int k) const;
  double occupancy(int i, int j, int k) const;  // 0 outside the cutoff
  double mode_energy(int i, int j, int k) const;
};

// Discrete analog of R: sum_i n_i (n_{i-Delta} + 1) / N_box for the given
// lattice momentum transfer.  Converges to total_rate as box_scale grows.
double box_rate(const BoxModel& model, const std::array<int, 3>& delta_mode);

struct EnergyBalance {
  // Net and gross stimulated energy flow over all ordered (initial, final)
  // mode pairs, direct double summation.
  double stimulated_net = 0.0;
  double stimulated_gross = 0.0;
  // Mean recoil energy per unstimulated scattering (uniform over final
  // modes); strictly positive.
  double unstimulated_per_scattering = 0.0;
};

EnergyBalance stimulated_energy_balance(const BoxModel& model);

}  // namespace bosescatter

#endif
