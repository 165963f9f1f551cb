#include "bosescatter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bosescatter/quadrature.hpp"

namespace bosescatter {

ValueWithError term2b_quadrature_3d(const ScaledPoint& point, const ThermoState& thermo,
                                    const QuadratureConfig& config) {
  config.validate();
  const double delta = point.delta;
  const double tau = point.tau;
  const Fugacity lam = thermo.fugacity;
  if (lam.value() == 0.0) return {0.0, 0.0};
  const double p_max = config.p_max(tau);

  auto inner = [&](double p) -> double {
    // Polar-angle integral of the shifted occupation, in the variable
    // s = 1 - mu so the ramp of width (p-delta)^2/(2 p delta) at mu = 1
    // stays resolvable in floating point when p is close to delta.  The
    // s form of q^2 also avoids the cancellation of the naive
    // p^2 + delta^2 - 2 p delta mu.
    const double pd = p - delta;
    auto g = [&](double s) {
      const double q2 = pd * pd + 2.0 * p * delta * s;
      return occupation(std::max(q2, 1e-300), tau, lam);
    };
    std::vector<double> bp = {1e-8, 1e-4, 1e-2, 0.1, 1.0};
    const double eps = pd * pd / (2.0 * p * delta);
    for (double f : {1e-2, 1.0, 1e2, 1e4, 1e6, 1e8}) bp.push_back(eps * f);
    IntegralResult r =
        integrate_adaptive(g, 0.0, 2.0, bp, config.rel_tol, 1e-30, config.max_subdivisions);
    return r.value;
  };

  auto integrand = [&](double p) -> double {
    if (p <= 0.0) return 0.0;
    return p * p * occupation(p * p, tau, lam) * inner(p);
  };

  const double prefactor = 2.0 * std::numbers::pi / thermo.n_total;
  IntegralResult outer = integrate_adaptive(
      integrand, 0.0, p_max,
      {1e-4, 1e-3, 1e-2, 1e-1, delta * 0.5, delta * 0.9, delta, delta * 1.1, 2.0 * delta},
      config.rel_tol, config.rel_tol * 1e-4 / prefactor, config.max_subdivisions);

  return {prefactor * outer.value, prefactor * outer.error};
}

namespace {

// Tabulated inverse CDF of the radial density p^2 n(p^2) on [0, p_max],
// piecewise-linear density within each bin.
class RadialSampler {
 public:
  RadialSampler(double tau, const Fugacity& lam, double p_max, int n_bins = 4096)
      : p_max_(p_max), h_(p_max / n_bins) {
    density_.resize(n_bins + 1);
    cdf_.resize(n_bins + 1);
    density_[0] = (lam.value() == 1.0) ? 2.0 * tau : 0.0;  // limit of p^2 n(p^2)
    for (int i = 1; i <= n_bins; ++i) {
      const double p = i * h_;
      density_[i] = p * p * occupation(p * p, tau, lam);
    }
    cdf_[0] = 0.0;
    for (int i = 1; i <= n_bins; ++i)
      cdf_[i] = cdf_[i - 1] + 0.5 * (density_[i - 1] + density_[i]) * h_;
    norm_ = cdf_.back();
    for (double& c : cdf_) c /= norm_;
  }

  double sample(double u) const {
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    std::size_t i = (it == cdf_.begin()) ? 0 : static_cast<std::size_t>(it - cdf_.begin()) - 1;
    if (i + 1 >= cdf_.size()) i = cdf_.size() - 2;
    const double d0 = density_[i], d1 = density_[i + 1];
    const double rem = (u - cdf_[i]) * norm_;  // un-normalized mass into the bin
    // Solve d0 t + (d1-d0) t^2 / 2 = rem / h for t in [0, 1].
    const double c = rem / h_;
    const double slope = d1 - d0;
    double t;
    if (std::fabs(slope) < 1e-14 * (d0 + d1 + 1e-300)) {
      t = (d0 > 0.0) ? c / d0 : 0.0;
    } else {
      const double disc = d0 * d0 + 2.0 * slope * c;
      t = (std::sqrt(std::max(disc, 0.0)) - d0) / slope;
    }
    t = std::clamp(t, 0.0, 1.0);
    return (i + t) * h_;
  }

 private:
  double p_max_, h_, norm_ = 1.0;
  std::vector<double> density_;
  std::vector<double> cdf_;
};

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

MonteCarloResult term2b_monte_carlo(const ScaledPoint& point, const ThermoState& thermo,
                                    std::uint64_t samples, std::uint64_t seed) {
  if (samples < 10000) throw std::domain_error("term2b_monte_carlo: need at least 1e4 samples");
  const double delta = point.delta;
  const double tau = point.tau;
  const Fugacity lam = thermo.fugacity;

  MonteCarloResult out;
  out.samples = samples;
  out.seed = seed;
  if (lam.value() == 0.0) return out;

  const QuadratureConfig config;  // defaults for the truncation radius
  const double p_max = config.p_max(tau);
  const RadialSampler sampler(tau, lam, p_max, 4096);

  // Thermal density carried by the sampled distribution; the estimator is
  // (N_thermal / N_total) * E[occupation(|p - Delta|^2)].
  const double n_thermal =
      std::pow(2.0 * std::numbers::pi * tau, 1.5) * polylog_g32(lam);

  std::mt19937_64 rng(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double u = uniform01(rng);
    const double v = uniform01(rng);
    const double p = sampler.sample(u);
    // Importance-sample the polar angle with density proportional to
    // 1/q^2, q^2 = a + b(1-mu); at lambda = 1 the plain uniform-mu
    // estimator has infinite variance from the 1/q^2 payload spike.
    const double a = std::max((p - delta) * (p - delta), 1e-290);
    const double b = 2.0 * p * delta;
    double payload;
    if (b > 0.0) {
      const double log_apb = std::log(a + 2.0 * b);
      const double log_a = std::log(a);
      const double q2 = std::exp((1.0 - v) * log_apb + v * log_a);  // a + b(1-mu)
      const double z = (log_apb - log_a) / b;  // normalization of 1/q^2 over mu
      payload = occupation(q2, tau, lam) * 0.5 * z * q2;
    } else {  // p = 0: q = delta regardless of angle
      payload = occupation(a, tau, lam);
    }
    sum += payload;
    sum_sq += payload * payload;
  }

  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  const double scale = n_thermal / thermo.n_total;
  out.estimate = scale * mean;
  out.std_error = scale * std::sqrt(var / n);
  return out;
}

std::size_t BoxModel::index(int i, int j, int k) const {
  const int m = max_mode;
  const std::size_t s = static_cast<std::size_t>(side());
  return (static_cast<std::size_t>(i + m) * s + static_cast<std::size_t>(j + m)) * s +
         static_cast<std::size_t>(k + m);
}

double BoxModel::occupancy(int i, int j, int k) const {
  if (std::abs(i) > max_mode || std::abs(j) > max_mode || std::abs(k) > max_mode) return 0.0;
  return occupancies[index(i, j, k)];
}

double BoxModel::mode_energy(int i, int j, int k) const {
  const double d = mode_spacing();
  return 0.5 * d * d * (static_cast<double>(i) * i + static_cast<double>(j) * j +
                        static_cast<double>(k) * k);
}

namespace {

// Sum of occupancies over all modes except (0,0,0) at fugacity lambda.
double excited_sum(const BoxModel& shape, double tau, const Fugacity& lam) {
  const int m = shape.max_mode;
  const double d = shape.mode_spacing();
  double sum = 0.0;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      for (int k = -m; k <= m; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        const double p2 = d * d * (static_cast<double>(i) * i + static_cast<double>(j) * j +
                                   static_cast<double>(k) * k);
        sum += occupation(p2, tau, lam);
      }
  return sum;
}

double zero_mode_occupancy(double tau, const Fugacity& lam) {
  // 1/(lambda^{-1} - 1) = lambda / (1 - lambda)
  return lam.value() / (1.0 - lam.value());
}

}  // namespace

BoxModel BoxModel::make(double box_scale, int max_mode, double tau,
                        DensityConvention convention) {
  if (!(box_scale > 0.0)) throw std::domain_error("BoxModel: box_scale must be positive");
  if (max_mode < 1) throw std::domain_error("BoxModel: max_mode must be >= 1");
  if (!(tau > 0.0)) throw std::domain_error("BoxModel: tau must be positive");

  BoxModel model;
  model.box_scale = box_scale;
  model.max_mode = max_mode;
  model.tau = tau;
  model.target_density = critical_density(convention);

  const double d = model.mode_spacing();
  const double cell = d * d * d;
  const double target_count = model.target_density / cell;

  double n_zero;
  if (tau <= 1.0) {
    model.fugacity = Fugacity(1.0);
    const double excited = excited_sum(model, tau, model.fugacity);
    n_zero = target_count - excited;
    if (n_zero < 0.0)
      throw std::domain_error("BoxModel: box too small, thermal modes overshoot the target density");
  } else {
    // Bisect the fugacity so the discrete sum hits the target count.
    double lo = 1e-12, hi = 1.0 - 1e-14;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const Fugacity lam(mid);
      const double count = excited_sum(model, tau, lam) + zero_mode_occupancy(tau, lam);
      if (count < target_count)
        lo = mid;
      else
        hi = mid;
    }
    model.fugacity = Fugacity(0.5 * (lo + hi));
    n_zero = zero_mode_occupancy(tau, model.fugacity);
  }

  const int m = max_mode;
  model.occupancies.assign(static_cast<std::size_t>(model.side()) * model.side() * model.side(),
                           0.0);
  double count = 0.0, boundary = 0.0;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      for (int k = -m; k <= m; ++k) {
        double n;
        if (i == 0 && j == 0 && k == 0) {
          n = n_zero;
        } else {
          const double p2 = d * d * (static_cast<double>(i) * i + static_cast<double>(j) * j +
                                     static_cast<double>(k) * k);
          n = occupation(p2, tau, model.fugacity);
        }
        model.occupancies[model.index(i, j, k)] = n;
        count += n;
        if (std::abs(i) == m || std::abs(j) == m || std::abs(k) == m)
          boundary = std::max(boundary, n);
      }
  model.particle_count = count;
  model.boundary_occupancy = boundary;
  model.cutoff_warning = boundary > 1e-12;
  return model;
}

double box_rate(const BoxModel& model, const std::array<int, 3>& delta_mode) {
  if (delta_mode[0] == 0 && delta_mode[1] == 0 && delta_mode[2] == 0)
    throw std::domain_error("box_rate: delta mode must be non-zero");
  const int m = model.max_mode;
  double stimulated = 0.0;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      for (int k = -m; k <= m; ++k) {
        const double n_i = model.occupancies[model.index(i, j, k)];
        if (n_i == 0.0) continue;
        stimulated +=
            n_i * model.occupancy(i - delta_mode[0], j - delta_mode[1], k - delta_mode[2]);
      }
  return 1.0 + stimulated / model.particle_count;
}

EnergyBalance stimulated_energy_balance(const BoxModel& model) {
  const int m = model.max_mode;
  const std::size_t n_modes = model.occupancies.size();

  std::vector<double> energies(n_modes);
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      for (int k = -m; k <= m; ++k)
        energies[model.index(i, j, k)] = model.mode_energy(i, j, k);

  const std::vector<double>& occ = model.occupancies;

  // Direct double sum over ordered pairs; the net flow cancels pairwise
  // because n_i n_f is symmetric under i <-> f while E_f - E_i flips sign.
  double net = 0.0, gross = 0.0;
  for (std::size_t a = 0; a < n_modes; ++a) {
    const double n_a = occ[a];
    if (n_a == 0.0) continue;
    const double e_a = energies[a];
    for (std::size_t b = 0; b < n_modes; ++b) {
      const double w = n_a * occ[b];
      const double de = energies[b] - e_a;
      net += w * de;
      gross += w * std::fabs(de);
    }
  }

  double sum_n = 0.0, sum_ne = 0.0, sum_e = 0.0;
  for (std::size_t a = 0; a < n_modes; ++a) {
    sum_n += occ[a];
    sum_ne += occ[a] * energies[a];
    sum_e += energies[a];
  }

  EnergyBalance out;
  out.stimulated_net = net;
  out.stimulated_gross = gross;
  out.unstimulated_per_scattering = sum_e / static_cast<double>(n_modes) - sum_ne / sum_n;
  return out;
}

}  // namespace bosescatter
