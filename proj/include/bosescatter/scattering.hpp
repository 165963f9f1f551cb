#ifndef BOSESCATTER_SCATTERING_HPP
#define BOSESCATTER_SCATTERING_HPP

#include <string>
#include <vector>

#include "bosescatter/config.hpp"
#include "bosescatter/thermo.hpp"

namespace bosescatter {

// Evaluation point in the natural dimensionless variables: momentum
// transfer magnitude delta > 0 (delta = 0 is the excluded forward
// direction) and scaled temperature tau = T/T_c > 0.
struct ScaledPoint {
  double delta;
  double tau;

  ScaledPoint(double delta_, double tau_) : delta(delta_), tau(tau_) {
    if (!(delta > 0.0)) throw std::domain_error("delta must be positive");
    if (!(tau > 0.0)) throw std::domain_error("tau must be positive");
  }
};

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

// Term-by-term normalized scattering rate.  total is the exact sum of the
// three components by construction.
struct RateBreakdown {
  double unstimulated = 1.0;
  double thermal_thermal = 0.0;
  double condensate = 0.0;
  double total = 1.0;
  double quadrature_error = 0.0;
};

// Thermal-thermal stimulated term: the double occupation integral over
// (p, p') with p - p' = Delta, divided by N_total.  Evaluated through the
// closed-form angular reduction
//   (2 pi tau / Delta) Int_0^inf dp p n(p^2)
//       ln[(1 - lam e^{-(p+Delta)^2/2tau}) / (1 - lam e^{-(p-Delta)^2/2tau})],
// which is cross-validated against the direct 3D quadrature in the oracle
// module.
ValueWithError thermal_thermal_term(const ScaledPoint& point, const ThermoState& thermo,
                                    const QuadratureConfig& config);

// Condensate term, 2 (N0/N_total) n(Delta^2) for tau < 1, else 0.  The
// factor 2 counts the p=0 -> Delta and Delta -> p=0 transitions.
double condensate_term(const ScaledPoint& point, const ThermoState& thermo);

RateBreakdown total_rate(const ScaledPoint& point, const QuadratureConfig& config);

struct SweepRow {
  double delta = 0.0;
  double tau = 0.0;
  RateBreakdown rate;
  bool ok = false;
  std::string error;  // failure message for this point, empty when ok
};

// One RateBreakdown per grid point.  Per-point failures are recorded in
// the row instead of aborting the sweep.  threads = 0 means use
// min(hardware concurrency, BOSE_SCATTER_THREADS if set).
std::vector<SweepRow> sweep_tau(double delta, const std::vector<double>& tau_grid,
                                const QuadratureConfig& config, unsigned threads = 0);
std::vector<SweepRow> sweep_delta(double tau, const std::vector<double>& delta_grid,
                                  const QuadratureConfig& config, unsigned threads = 0);

// Angle-integrated stimulated enhancement 4 pi Int delta^2 (R - 1) ddelta.
// Equals N_total for tau >= 1 and N_total (1 - (1 - tau^{3/2})^2) below.
double sum_rule(double tau, const QuadratureConfig& config);

// Resolve the sweep thread cap: explicit request > BOSE_SCATTER_THREADS
// env var > hardware concurrency.
unsigned resolve_thread_count(unsigned requested, std::size_t n_points);

}  // namespace bosescatter

#endif
