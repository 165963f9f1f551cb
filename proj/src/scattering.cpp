#include "bosescatter/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "bosescatter/quadrature.hpp"

namespace bosescatter {

namespace {

// ln(1 - lambda e^{-s}) evaluated without cancellation: the argument is
// -expm1(ln lambda - s), positive for s > ln lambda.
double log_one_minus_lambda_exp(double log_lambda, double s) {
  return std::log(-std::expm1(log_lambda - s));
}

std::vector<double> radial_breakpoints(double delta, double p_max) {
  // Seeds for the near-critical small-p peak plus the (integrable) log
  // singularity at p = delta when lambda = 1.
  std::vector<double> pts = {1e-4, 1e-3, 1e-2, 1e-1};
  if (delta < p_max) pts.push_back(delta);
  if (2.0 * delta < p_max) pts.push_back(2.0 * delta);
  return pts;
}

}  // namespace

ValueWithError thermal_thermal_term(const ScaledPoint& point, const ThermoState& thermo,
                                    const QuadratureConfig& config) {
  config.validate();
  const double delta = point.delta;
  const double tau = point.tau;
  const Fugacity lam = thermo.fugacity;
  if (lam.value() == 0.0) return {0.0, 0.0};
  const double log_lam = lam.log_value();
  const double p_max = config.p_max(tau);

  auto integrand = [&](double p) -> double {
    if (p <= 0.0) return 0.0;
    const double occ_p = occupation(p * p, tau, lam);
    const double b = (p + delta) * (p + delta) / (2.0 * tau);
    const double a = (p - delta) * (p - delta) / (2.0 * tau);
    // The log difference is O(p Delta / tau) as p -> 0; switch to the
    // derivative form before the explicit difference loses its digits.
    if (2.0 * p * delta / tau < 1e-7) {
      const double s0 = (p * p + delta * delta) / (2.0 * tau);
      const double bose = 1.0 / std::expm1(s0 - log_lam);
      return p * occ_p * (2.0 * p * delta / tau) * bose;
    }
    const double log_diff =
        log_one_minus_lambda_exp(log_lam, b) - log_one_minus_lambda_exp(log_lam, a);
    return p * occ_p * log_diff;
  };

  const double prefactor = 2.0 * std::numbers::pi * tau / (delta * thermo.n_total);
  // Absolute floor: rates sit on top of the unstimulated 1, so chasing
  // relative accuracy on a term below ~1e-12 is pointless.
  const double abs_tol = config.rel_tol * 1e-4 / prefactor;

  IntegralResult r;
  try {
    r = integrate_adaptive(integrand, 0.0, p_max, radial_breakpoints(delta, p_max),
                           config.rel_tol, abs_tol, config.max_subdivisions);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("thermal_thermal_term(delta=" + std::to_string(delta) +
                           ", tau=" + std::to_string(tau) + "): " + e.what());
  }
  return {prefactor * r.value, prefactor * r.error};
}

double condensate_term(const ScaledPoint& point, const ThermoState& thermo) {
  if (thermo.condensate_fraction <= 0.0) return 0.0;
  return 2.0 * thermo.condensate_fraction *
         occupation(point.delta * point.delta, point.tau, Fugacity(1.0));
}

RateBreakdown total_rate(const ScaledPoint& point, const QuadratureConfig& config) {
  const ThermoState thermo = ThermoState::at(point.tau, config.n_total_convention);
  RateBreakdown out;
  const ValueWithError tt = thermal_thermal_term(point, thermo, config);
  out.thermal_thermal = tt.value;
  out.quadrature_error = tt.error;
  out.condensate = condensate_term(point, thermo);
  out.total = out.unstimulated + out.thermal_thermal + out.condensate;
  return out;
}

unsigned resolve_thread_count(unsigned requested, std::size_t n_points) {
  unsigned n = requested;
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("BOSE_SCATTER_THREADS")) {
      const long cap = std::strtol(env, nullptr, 10);
      if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
  }
  return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(n_points ? n_points : 1)));
}

namespace {

std::vector<SweepRow> sweep_points(const std::vector<ScaledPoint>& points,
                                   const QuadratureConfig& config, unsigned threads) {
  std::vector<SweepRow> rows(points.size());
  const unsigned n_threads = resolve_thread_count(threads, points.size());

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < points.size(); i += stride) {
      SweepRow& row = rows[i];
      row.delta = points[i].delta;
      row.tau = points[i].tau;
      try {
        row.rate = total_rate(points[i], config);
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };

  if (n_threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work, t, n_threads);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep_tau(double delta, const std::vector<double>& tau_grid,
                                const QuadratureConfig& config, unsigned threads) {
  for (std::size_t i = 1; i < tau_grid.size(); ++i)
    if (!(tau_grid[i] > tau_grid[i - 1]))
      throw std::domain_error("sweep_tau: grid must be strictly increasing");
  std::vector<ScaledPoint> points;
  points.reserve(tau_grid.size());
  for (double tau : tau_grid) points.emplace_back(delta, tau);
  return sweep_points(points, config, threads);
}

std::vector<SweepRow> sweep_delta(double tau, const std::vector<double>& delta_grid,
                                  const QuadratureConfig& config, unsigned threads) {
  for (std::size_t i = 1; i < delta_grid.size(); ++i)
    if (!(delta_grid[i] > delta_grid[i - 1]))
      throw std::domain_error("sweep_delta: grid must be strictly increasing");
  std::vector<ScaledPoint> points;
  points.reserve(delta_grid.size());
  for (double delta : delta_grid) points.emplace_back(delta, tau);
  return sweep_points(points, config, threads);
}

double sum_rule(double tau, const QuadratureConfig& config) {
  config.validate();
  const ThermoState thermo = ThermoState::at(tau, config.n_total_convention);

  // The inner rate evaluations can run at a slightly looser tolerance than
  // the outer integral needs; 1% acceptance leaves ample headroom.
  QuadratureConfig inner = config;
  inner.rel_tol = std::max(config.rel_tol, 1e-9);

  const double delta_min = 1e-4;
  const double delta_max = 30.0;
  auto integrand = [&](double delta) -> double {
    const ScaledPoint point(delta, tau);
    const double stimulated =
        thermal_thermal_term(point, thermo, inner).value + condensate_term(point, thermo);
    return 4.0 * std::numbers::pi * delta * delta * stimulated;
  };

  IntegralResult outer =
      integrate_adaptive(integrand, delta_min, delta_max,
                         {3e-4, 1e-3, 3e-3, 1e-2, 3e-2, 0.1, 0.3, 1.0, 3.0, 10.0},
                         std::max(config.rel_tol, 1e-6), 1e-8, config.max_subdivisions);

  double result = outer.value;
  // Analytic patch for [0, delta_min]: the condensate term diverges there
  // as 4 tau f0 / delta^2, whose delta^2-weighted integral is finite.
  if (thermo.condensate_fraction > 0.0)
    result += 16.0 * std::numbers::pi * tau * thermo.condensate_fraction * delta_min;
  return result;
}

}  // namespace bosescatter
