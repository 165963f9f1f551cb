// Acceptance gate: one PASS/FAIL line per numbered claim, pinned
// tolerances, nonzero exit if anything is red.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bosescatter/oracle.hpp"
#include "bosescatter/scattering.hpp"

namespace bs = bosescatter;

namespace {

int failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& detail) {
    if (!ok) {
      all_ok_ = false;
      ++failures;
    }
    details_.push_back(std::string(ok ? "ok" : "FAILED") + ": " + detail);
  }

  ~Criterion() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::ostringstream line;
    line << (all_ok_ ? "PASS" : "FAIL") << " criterion " << number_ << " (" << title_ << ") ["
         << secs << " s]";
    std::cout << line.str() << "\n";
    for (const auto& d : details_) std::cout << "    " << d << "\n";
    std::cout.flush();
  }

 private:
  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> details_;
  bool all_ok_ = true;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(8);
  os << x;
  return os.str();
}

void criterion1() {
  Criterion c(1, "above-critical enhancement in [2, 5]");
  for (auto convention : {bs::DensityConvention::integral, bs::DensityConvention::paper_constant}) {
    bs::QuadratureConfig config;
    config.n_total_convention = convention;
    bool found = false;
    double best_delta = 0.0, best_tau = 0.0, best_rate = 0.0;
    for (double delta : {0.1, 0.3, 0.5, 1.0}) {
      for (double tau : {1.1, 1.2, 1.5}) {
        const double r = bs::total_rate(bs::ScaledPoint(delta, tau), config).total;
        if (r >= 2.0 && r <= 5.0) {
          found = true;
          best_delta = delta;
          best_tau = tau;
          best_rate = r;
        }
      }
      if (found) break;
    }
    c.check(found, std::string(bs::to_string(convention)) + " convention: R(" + num(best_delta) +
                       ", " + num(best_tau) + ") = " + num(best_rate) + " in [2, 5]");
  }
}

void criterion2() {
  Criterion c(2, "below-critical jump at delta = 0.1");
  const bs::QuadratureConfig config;
  const double at_tc = bs::total_rate(bs::ScaledPoint(0.1, 1.0), config).total;
  const double below = bs::total_rate(bs::ScaledPoint(0.1, 0.8), config).total;
  c.check(below >= 20.0 * at_tc, "R(0.1, 0.8) / R(0.1, 1.0) = " + num(below / at_tc) +
                                     " (required >= 20; R(0.1, 1.0) = " + num(at_tc) + ")");
  double peak = 0.0;
  for (double tau = 0.75; tau <= 0.9 + 1e-12; tau += 0.025)
    peak = std::max(peak, bs::total_rate(bs::ScaledPoint(0.1, tau), config).total);
  c.check(peak > 100.0, "max R(0.1, tau) over tau in [0.75, 0.9] = " + num(peak) + " > 100");
}

void criterion3() {
  Criterion c(3, "continuity of R and dR/dtau at tau = 1");
  const bs::QuadratureConfig config;
  const double h = 1e-3;
  for (double delta : {0.1, 0.3, 1.0}) {
    const double r_minus = bs::total_rate(bs::ScaledPoint(delta, 1.0 - h), config).total;
    const double r_at = bs::total_rate(bs::ScaledPoint(delta, 1.0), config).total;
    const double r_plus = bs::total_rate(bs::ScaledPoint(delta, 1.0 + h), config).total;

    const double jump = std::abs(r_plus - r_minus);
    c.check(jump <= 0.05 * r_at, "delta = " + num(delta) + ": |R(1+h) - R(1-h)| = " + num(jump) +
                                     " <= 0.05 R(1) = " + num(0.05 * r_at));

    const double slope_left = (r_at - r_minus) / h;
    const double slope_right = (r_plus - r_at) / h;
    const double rel = std::abs(slope_left - slope_right) /
                       std::max(std::abs(slope_left), std::abs(slope_right));
    c.check(rel <= 0.05, "delta = " + num(delta) +
                             ": one-sided slope mismatch = " + num(rel) + " <= 0.05");
  }
}

void criterion4() {
  Criterion c(4, "sum rule");
  bs::QuadratureConfig config;
  config.rel_tol = 1e-7;
  const double n_total = bs::critical_density(config.n_total_convention);
  for (double tau : {1.0, 1.5, 2.0}) {
    const double value = bs::sum_rule(tau, config);
    c.check(std::abs(value / n_total - 1.0) < 0.01,
            "tau = " + num(tau) + ": integral / N_total = " + num(value / n_total));
  }
  for (double tau : {0.5, 0.8}) {
    const double f0 = bs::condensate_fraction(tau);
    const double expected = n_total * (1.0 - f0 * f0);
    const double value = bs::sum_rule(tau, config);
    c.check(std::abs(value / expected - 1.0) < 0.01,
            "tau = " + num(tau) + ": integral / expected = " + num(value / expected));
  }
}

void criterion5() {
  Criterion c(5, "reduced form vs 3D quadrature and Monte Carlo oracles");
  bs::QuadratureConfig config;
  config.rel_tol = 1e-7;
  for (double delta : {0.1, 0.5, 2.0}) {
    for (double tau : {0.8, 1.0, 1.5}) {
      const bs::ScaledPoint point(delta, tau);
      const bs::ThermoState thermo = bs::ThermoState::at(tau, config.n_total_convention);
      const double reduced = bs::thermal_thermal_term(point, thermo, config).value;
      const double direct = bs::term2b_quadrature_3d(point, thermo, config).value;
      const double scale = std::max({std::abs(reduced), std::abs(direct), 1e-10});
      c.check(std::abs(reduced - direct) / scale < 5e-3,
              "(" + num(delta) + ", " + num(tau) + "): 1D " + num(reduced) + " vs 3D " +
                  num(direct));

      const auto mc = bs::term2b_monte_carlo(point, thermo, 10000000, 20260824);
      const double band = 3.0 * mc.std_error;
      c.check(std::abs(mc.estimate - reduced) <= std::max(band, 1e-9),
              "(" + num(delta) + ", " + num(tau) + "): MC " + num(mc.estimate) + " +- " +
                  num(mc.std_error) + " vs " + num(reduced));
    }
  }
}

void criterion6() {
  Criterion c(6, "fugacity expansion and defining residual");
  const double zeta32 = bs::zeta_three_halves();
  std::array<double, 3> errs{};
  const std::array<double, 3> hs = {0.05, 0.025, 0.0125};
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double tau = 1.0 + hs[i];
    errs[i] = std::abs(bs::fugacity(tau).value() - bs::near_critical_expansion(tau).value());
  }
  for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
    const double ratio = errs[i] / errs[i + 1];
    c.check(ratio > 6.0 && ratio < 10.0,
            "halving h scales the expansion error by " + num(ratio) + " (cubic: ~8)");
  }
  for (double tau : {1.01, 1.3, 2.0, 5.0}) {
    const double residual =
        std::abs(bs::polylog_g32(bs::fugacity(tau)) - zeta32 * std::pow(tau, -1.5));
    c.check(residual < 1e-10, "tau = " + num(tau) + ": density residual " + num(residual));
  }
}

void criterion7() {
  Criterion c(7, "energy balance in a 32^3-mode box");
  const bs::BoxModel box = bs::BoxModel::make(2.0 * std::numbers::pi / 0.25, 16, 1.2);
  const bs::EnergyBalance eb = bs::stimulated_energy_balance(box);
  c.check(std::abs(eb.stimulated_net) <= 1e-10 * eb.stimulated_gross,
          "stimulated net / gross = " + num(eb.stimulated_net / eb.stimulated_gross));
  c.check(eb.unstimulated_per_scattering > 0.0,
          "unstimulated recoil per event = " + num(eb.unstimulated_per_scattering) + " > 0");
}

void criterion8() {
  Criterion c(8, "enhancement vanishes at T -> 0 and large delta");
  const bs::QuadratureConfig config;
  const double cold = bs::total_rate(bs::ScaledPoint(1.0, 0.05), config).total;
  c.check(std::abs(cold - 1.0) <= 1e-3, "R(1, 0.05) = " + num(cold) + " = 1 +- 1e-3");
  const double wide = bs::total_rate(bs::ScaledPoint(5.0, 1.5), config).total;
  c.check(std::abs(wide - 1.0) <= 0.01, "R(5, 1.5) = " + num(wide) + " = 1 +- 1%");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void criterion9() {
  Criterion c(9, "bit-identical reruns");
  const std::string cli = BOSESCATTER_CLI_PATH;
  const auto base = std::filesystem::temp_directory_path() / "bose_acceptance";
  std::filesystem::remove_all(base);

  bool identical = true;
  for (int run = 0; run < 2; ++run) {
    const auto dir = base / ("fig" + std::to_string(run));
    const std::string cmd = cli +
                            " figure1 --delta-list 0.1,0.3,1.0 --tau-min 0.8 --tau-max 1.6"
                            " --steps 17 --out " +
                            dir.string() + " > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) identical = false;
  }
  int compared = 0;
  if (identical)
    for (const auto& entry : std::filesystem::directory_iterator(base / "fig0")) {
      ++compared;
      if (slurp(entry.path()) != slurp(base / "fig1" / entry.path().filename()))
        identical = false;
    }
  c.check(identical && compared == 3,
          "figure1 rerun byte-compare over " + std::to_string(compared) + " csv files");

  std::array<std::string, 2> mc_out;
  bool mc_ok = true;
  for (int run = 0; run < 2; ++run) {
    const auto out = base / ("mc" + std::to_string(run) + ".json");
    const std::string cmd = cli +
                            " --format json oracle mc --delta 0.5 --tau 1.2 --samples 1000000"
                            " --seed 17 --out " +
                            out.string() + " > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) mc_ok = false;
    mc_out[run] = slurp(out);
  }
  c.check(mc_ok && !mc_out[0].empty() && mc_out[0] == mc_out[1],
          "seeded Monte Carlo rerun byte-compare");
  std::filesystem::remove_all(base);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures > 0) {
    std::cout << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
