#include "bosescatter/thermo.hpp"

#include <cmath>
#include <numbers>

#include "bosescatter/errors.hpp"

namespace bosescatter {

double critical_density(DensityConvention convention) {
  const double integral = std::pow(2.0 * std::numbers::pi, 1.5) * zeta_three_halves();
  return convention == DensityConvention::integral ? integral : 0.5 * integral;
}

double condensate_fraction(double tau) {
  if (!(tau > 0.0)) throw std::domain_error("condensate_fraction: tau must be positive");
  return std::max(0.0, 1.0 - std::pow(tau, 1.5));
}

Fugacity near_critical_expansion(double tau) {
  if (!(tau >= 1.0)) throw std::domain_error("near_critical_expansion: tau must be >= 1");
  const double z = zeta_three_halves();
  const double h = tau - 1.0;
  return Fugacity(1.0 - 9.0 / (16.0 * std::numbers::pi) * z * z * h * h);
}

Fugacity fugacity(double tau) {
  if (!(tau > 0.0)) throw std::domain_error("fugacity: tau must be positive");
  if (tau <= 1.0) return Fugacity(1.0);

  const double target = zeta_three_halves() * std::pow(tau, -1.5);

  // Bracketed bisection/secant hybrid on the monotone g_{3/2}.
  double lo = 0.0, hi = 1.0 - 1e-16;
  double f_lo = -target;
  double f_hi = zeta_three_halves() - target;  // g32(1-1e-16) ~ zeta(3/2)
  double x = (tau < 1.3) ? near_critical_expansion(tau).value() : 0.5;
  const int max_iter = 200;
  for (int it = 0; it < max_iter; ++it) {
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    const double fx = polylog_g32(x) - target;
    if (std::fabs(fx) <= 1e-12) return Fugacity(x);
    if (fx < 0.0) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    // Secant step from the bracket endpoints, falling back to bisection.
    const double denom = f_hi - f_lo;
    x = (denom != 0.0) ? lo - f_lo * (hi - lo) / denom : 0.5 * (lo + hi);
    // Near tau = 1 the slope of g_{3/2} diverges, so the residual floor is
    // set by the lambda spacing; a collapsed bracket is the machine root.
    if (hi - lo < 4e-16) return Fugacity(0.5 * (lo + hi));
  }
  throw ConvergenceError("fugacity: root finder exhausted its iteration budget at tau=" +
                         std::to_string(tau));
}

ThermoState ThermoState::at(double tau, DensityConvention convention) {
  return ThermoState{tau, bosescatter::fugacity(tau), bosescatter::condensate_fraction(tau),
                     critical_density(convention)};
}

}  // namespace bosescatter
