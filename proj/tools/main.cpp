// bose-scatter: CLI front end for the Bose-stimulated light-scattering
// rate engine.  Subcommands: rate, sweep-tau, sweep-delta, figure1,
// sumrule, convert, oracle {quad3d|mc|box|energy}.
//
// Exit codes: 0 success, 2 usage/validation error, 3 numerical
// non-convergence.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bosescatter/errors.hpp"
#include "bosescatter/lab_units.hpp"
#include "bosescatter/oracle.hpp"
#include "bosescatter/scattering.hpp"
#include "bosescatter/version.hpp"
#include "json.hpp"

namespace bs = bosescatter;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct GlobalOptions {
  bs::QuadratureConfig config;
  std::string convention = "integral";
  std::string format = "text";
  std::string out;

  void finalize() {
    config.n_total_convention = bs::density_convention_from_string(convention);
    config.validate();
  }
};

void add_global_flags(CLI::App& app, GlobalOptions& g) {
  app.add_option("--rel-tol", g.config.rel_tol, "Quadrature relative tolerance")
      ->capture_default_str();
  app.add_option("--max-subdivisions", g.config.max_subdivisions,
                 "Adaptive quadrature subdivision budget")
      ->capture_default_str();
  app.add_option("--p-truncation", g.config.p_truncation_multiplier,
                 "Radial truncation multiplier (p_max = mult * sqrt(2 tau))")
      ->capture_default_str();
  app.add_option("--convention", g.convention, "N_total convention: integral|paper_constant")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format: text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this path instead of stdout");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::domain_error("cannot open output file: " + out_path);
    f << text;
  }
}

json config_json(const bs::QuadratureConfig& c) {
  return json{{"rel_tol", c.rel_tol},
              {"max_subdivisions", c.max_subdivisions},
              {"n_total_convention", bs::to_string(c.n_total_convention)},
              {"p_truncation_multiplier", c.p_truncation_multiplier}};
}

std::string csv_metadata(const bs::QuadratureConfig& c) {
  std::ostringstream os;
  os << "# bose-scatter " << bs::kVersion << "\n";
  os << "# rel_tol=" << fmt17(c.rel_tol) << " max_subdivisions=" << c.max_subdivisions
     << " n_total_convention=" << bs::to_string(c.n_total_convention)
     << " p_truncation_multiplier=" << fmt17(c.p_truncation_multiplier) << "\n";
  return os.str();
}

json rate_json(const bs::RateBreakdown& r) {
  return json{{"unstimulated", r.unstimulated},
              {"thermal_thermal", r.thermal_thermal},
              {"condensate", r.condensate},
              {"total", r.total},
              {"quadrature_error", r.quadrature_error}};
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 2) throw std::domain_error("steps must be >= 2");
  if (!(hi > lo)) throw std::domain_error("grid maximum must exceed minimum");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  return grid;
}

// --- rate -----------------------------------------------------------------

int run_rate(const GlobalOptions& g, double delta, double tau) {
  const bs::RateBreakdown r = bs::total_rate(bs::ScaledPoint(delta, tau), g.config);
  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"command", "rate"},
               {"config", config_json(g.config)},
               {"delta", delta},
               {"tau", tau},
               {"rate", rate_json(r)}}
              .dump(2)
       << "\n";
  } else if (g.format == "csv") {
    os << csv_metadata(g.config);
    os << "delta,tau,unstimulated,thermal_thermal,condensate,total,quadrature_error\n";
    os << fmt17(delta) << ',' << fmt17(tau) << ',' << fmt17(r.unstimulated) << ','
       << fmt17(r.thermal_thermal) << ',' << fmt17(r.condensate) << ',' << fmt17(r.total) << ','
       << fmt17(r.quadrature_error) << "\n";
  } else {
    os << "R(delta=" << delta << ", tau=" << tau << ")\n";
    os << "  unstimulated     " << fmt17(r.unstimulated) << "\n";
    os << "  thermal_thermal  " << fmt17(r.thermal_thermal) << "\n";
    os << "  condensate       " << fmt17(r.condensate) << "\n";
    os << "  total            " << fmt17(r.total) << "\n";
    os << "  quadrature_error " << fmt17(r.quadrature_error) << "\n";
  }
  write_output(os.str(), g.out);
  return kExitOk;
}

// --- sweeps ---------------------------------------------------------------

std::string sweep_csv(const GlobalOptions& g, const std::vector<bs::SweepRow>& rows) {
  std::ostringstream os;
  os << csv_metadata(g.config);
  os << "delta,tau,unstimulated,thermal_thermal,condensate,total,quadrature_error\n";
  for (const auto& row : rows) {
    if (!row.ok) {
      os << "# error delta=" << fmt17(row.delta) << " tau=" << fmt17(row.tau) << ": " << row.error
         << "\n";
      os << fmt17(row.delta) << ',' << fmt17(row.tau) << ",nan,nan,nan,nan,nan\n";
      continue;
    }
    const auto& r = row.rate;
    os << fmt17(row.delta) << ',' << fmt17(row.tau) << ',' << fmt17(r.unstimulated) << ','
       << fmt17(r.thermal_thermal) << ',' << fmt17(r.condensate) << ',' << fmt17(r.total) << ','
       << fmt17(r.quadrature_error) << "\n";
  }
  return os.str();
}

json sweep_json(const GlobalOptions& g, const char* command,
                const std::vector<bs::SweepRow>& rows) {
  json out{{"command", command}, {"config", config_json(g.config)}};
  json jrows = json::array();
  for (const auto& row : rows) {
    json jr{{"delta", row.delta}, {"tau", row.tau}, {"ok", row.ok}};
    if (row.ok)
      jr["rate"] = rate_json(row.rate);
    else
      jr["error"] = row.error;
    jrows.push_back(std::move(jr));
  }
  out["rows"] = std::move(jrows);
  return out;
}

int finish_sweep(const GlobalOptions& g, const char* command,
                 const std::vector<bs::SweepRow>& rows) {
  std::size_t failures = 0;
  for (const auto& row : rows)
    if (!row.ok) ++failures;

  std::ostringstream os;
  if (g.format == "json")
    os << sweep_json(g, command, rows).dump(2) << "\n";
  else
    os << sweep_csv(g, rows);
  write_output(os.str(), g.out);

  if (failures > 0) {
    std::cerr << "warning: " << failures << " of " << rows.size() << " points failed\n";
    if (10 * failures > rows.size()) return kExitNoConvergence;
  }
  return kExitOk;
}

// --- figure1 --------------------------------------------------------------

int run_figure1(const GlobalOptions& g, const std::vector<double>& delta_list, double tau_min,
                double tau_max, int steps, const std::string& out_dir) {
  const std::vector<double> grid = linspace(tau_min, tau_max, steps);
  std::filesystem::create_directories(out_dir.empty() ? "." : out_dir);

  std::size_t failures = 0, total = 0;
  for (double delta : delta_list) {
    const auto rows = bs::sweep_tau(delta, grid, g.config);
    std::ostringstream os;
    os << csv_metadata(g.config);
    os << "# delta=" << fmt17(delta) << "\n";
    os << "tau,total,condensate_contribution\n";
    for (const auto& row : rows) {
      ++total;
      if (!row.ok) {
        ++failures;
        os << "# error tau=" << fmt17(row.tau) << ": " << row.error << "\n";
        os << fmt17(row.tau) << ",nan,nan\n";
        continue;
      }
      os << fmt17(row.tau) << ',' << fmt17(row.rate.total) << ',' << fmt17(row.rate.condensate)
         << "\n";
    }
    std::ostringstream name;
    name << "figure1_delta_" << delta << ".csv";
    const std::filesystem::path path =
        std::filesystem::path(out_dir.empty() ? "." : out_dir) / name.str();
    std::ofstream f(path);
    if (!f) throw std::domain_error("cannot open output file: " + path.string());
    f << os.str();
    std::cout << path.string() << "\n";
  }

  if (failures > 0) {
    std::cerr << "warning: " << failures << " of " << total << " points failed\n";
    if (10 * failures > total) return kExitNoConvergence;
  }
  return kExitOk;
}

// --- sumrule --------------------------------------------------------------

int run_sumrule(const GlobalOptions& g, double tau) {
  const double value = bs::sum_rule(tau, g.config);
  const double n_total = bs::critical_density(g.config.n_total_convention);
  const double f0 = bs::condensate_fraction(tau);
  const double expected = n_total * (1.0 - f0 * f0);

  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"command", "sumrule"},
               {"config", config_json(g.config)},
               {"tau", tau},
               {"value", value},
               {"n_total", n_total},
               {"ratio_to_n_total", value / n_total},
               {"expected", expected}}
              .dump(2)
       << "\n";
  } else if (g.format == "csv") {
    os << csv_metadata(g.config);
    os << "tau,value,n_total,ratio_to_n_total,expected\n";
    os << fmt17(tau) << ',' << fmt17(value) << ',' << fmt17(n_total) << ','
       << fmt17(value / n_total) << ',' << fmt17(expected) << "\n";
  } else {
    os << "sum rule at tau=" << tau << "\n";
    os << "  4 pi Int delta^2 (R - 1) ddelta = " << fmt17(value) << "\n";
    os << "  N_total (" << bs::to_string(g.config.n_total_convention) << ") = " << fmt17(n_total)
       << "\n";
    os << "  ratio to N_total = " << fmt17(value / n_total) << "\n";
    os << "  expected N_total (1 - (1 - tau^{3/2})^2) = " << fmt17(expected) << "\n";
  }
  write_output(os.str(), g.out);
  return kExitOk;
}

// --- convert --------------------------------------------------------------

int run_convert(const GlobalOptions& g, double mass_amu, double wavelength_nm, double tc_nk,
                double angle_mrad, const std::string& polarization) {
  const bs::LabParameters params(mass_amu * bs::constants::atomic_mass_unit, wavelength_nm * 1e-9,
                                 tc_nk * 1e-9);
  const double k = bs::scaled_photon_momentum(params);
  const double theta = angle_mrad * 1e-3;
  const double delta = bs::delta_from_angle(theta, k);
  const double delta_small = bs::delta_from_angle_small(theta, k);
  const double pol =
      bs::polarization_factor(theta, bs::polarization_mode_from_string(polarization));

  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"command", "convert"},
               {"mass_amu", mass_amu},
               {"wavelength_nm", wavelength_nm},
               {"tc_nk", tc_nk},
               {"angle_mrad", angle_mrad},
               {"k", k},
               {"delta", delta},
               {"delta_small_angle", delta_small},
               {"polarization_mode", polarization},
               {"polarization_factor", pol}}
              .dump(2)
       << "\n";
  } else if (g.format == "csv") {
    os << csv_metadata(g.config);
    os << "mass_amu,wavelength_nm,tc_nk,angle_mrad,k,delta,delta_small_angle,polarization_factor\n";
    os << fmt17(mass_amu) << ',' << fmt17(wavelength_nm) << ',' << fmt17(tc_nk) << ','
       << fmt17(angle_mrad) << ',' << fmt17(k) << ',' << fmt17(delta) << ',' << fmt17(delta_small)
       << ',' << fmt17(pol) << "\n";
  } else {
    os << "scaled photon momentum k = " << fmt17(k) << "\n";
    os << "delta (exact)            = " << fmt17(delta) << "\n";
    os << "delta (small angle, theta*k) = " << fmt17(delta_small) << "\n";
    os << "polarization factor (" << polarization << ") = " << fmt17(pol) << "\n";
  }
  write_output(os.str(), g.out);
  return kExitOk;
}

// --- oracle ---------------------------------------------------------------

int run_oracle_quad3d(const GlobalOptions& g, double delta, double tau) {
  const bs::ThermoState thermo = bs::ThermoState::at(tau, g.config.n_total_convention);
  const bs::ValueWithError v =
      bs::term2b_quadrature_3d(bs::ScaledPoint(delta, tau), thermo, g.config);
  const bs::ValueWithError reduced =
      bs::thermal_thermal_term(bs::ScaledPoint(delta, tau), thermo, g.config);

  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"command", "oracle-quad3d"},
               {"config", config_json(g.config)},
               {"delta", delta},
               {"tau", tau},
               {"value", v.value},
               {"error", v.error},
               {"reduced_value", reduced.value}}
              .dump(2)
       << "\n";
  } else {
    os << "direct 3D quadrature = " << fmt17(v.value) << " (err " << fmt17(v.error) << ")\n";
    os << "reduced 1D form      = " << fmt17(reduced.value) << "\n";
  }
  write_output(os.str(), g.out);
  return kExitOk;
}

int run_oracle_mc(const GlobalOptions& g, double delta, double tau, std::uint64_t samples,
                  std::uint64_t seed) {
  const bs::ThermoState thermo = bs::ThermoState::at(tau, g.config.n_total_convention);
  const bs::MonteCarloResult mc =
      bs::term2b_monte_carlo(bs::ScaledPoint(delta, tau), thermo, samples, seed);

  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"command", "oracle-mc"},
               {"config", config_json(g.config)},
               {"delta", delta},
               {"tau", tau},
               {"samples", mc.samples},
               {"seed", mc.seed},
               {"estimate", mc.estimate},
               {"std_error", mc.std_error}}
              .dump(2)
       << "\n";
  } else {
    os << "monte carlo estimate = " << fmt17(mc.estimate) << " +- " << fmt17(mc.std_error)
       << "  (samples=" << mc.samples << " seed=" << mc.seed << ")\n";
  }
  write_output(os.str(), g.out);
  return kExitOk;
}

int run_oracle_box(const GlobalOptions& g, double box_scale, int max_mode, double tau,
                   const std::vector<int>& delta_mode) {
  if (delta_mode.size() != 3)
    throw std::domain_error("--delta-mode needs exactly three integers");
  const bs::BoxModel box =
      bs::BoxModel::make(box_scale, max_mode, tau, g.config.n_total_convention);
  const std::array<int, 3> dm = {delta_mode[0], delta_mode[1], delta_mode[2]};
  const double rate = bs::box_rate(box, dm);
  const double lattice_delta =
      box.mode_spacing() * std::sqrt(static_cast<double>(dm[0]) * dm[0] +
                                     static_cast<double>(dm[1]) * dm[1] +
                                     static_cast<double>(dm[2]) * dm[2]);
  const double continuum = bs::total_rate(bs::ScaledPoint(lattice_delta, tau), g.config).total;

  if (box.cutoff_warning)
    std::cerr << "warning: boundary occupancy " << box.boundary_occupancy << " exceeds 1e-12\n";

  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"command", "oracle-box"},
               {"config", config_json(g.config)},
               {"box_scale", box.box_scale},
               {"max_mode", box.max_mode},
               {"tau", tau},
               {"fugacity", box.fugacity.value()},
               {"delta_mode", delta_mode},
               {"lattice_delta", lattice_delta},
               {"box_rate", rate},
               {"continuum_rate", continuum},
               {"boundary_occupancy", box.boundary_occupancy},
               {"cutoff_warning", box.cutoff_warning}}
              .dump(2)
       << "\n";
  } else {
    os << "box rate (delta=" << fmt17(lattice_delta) << ") = " << fmt17(rate) << "\n";
    os << "continuum rate            = " << fmt17(continuum) << "\n";
    os << "fugacity=" << fmt17(box.fugacity.value())
       << " boundary_occupancy=" << fmt17(box.boundary_occupancy) << "\n";
  }
  write_output(os.str(), g.out);
  return kExitOk;
}

int run_oracle_energy(const GlobalOptions& g, double box_scale, int max_mode, double tau) {
  const bs::BoxModel box =
      bs::BoxModel::make(box_scale, max_mode, tau, g.config.n_total_convention);
  const bs::EnergyBalance eb = bs::stimulated_energy_balance(box);

  std::ostringstream os;
  if (g.format == "json") {
    os << json{{"command", "oracle-energy"},
               {"config", config_json(g.config)},
               {"box_scale", box.box_scale},
               {"max_mode", box.max_mode},
               {"tau", tau},
               {"stimulated_net", eb.stimulated_net},
               {"stimulated_gross", eb.stimulated_gross},
               {"unstimulated_per_scattering", eb.unstimulated_per_scattering}}
              .dump(2)
       << "\n";
  } else {
    os << "stimulated net energy flow   = " << fmt17(eb.stimulated_net) << "\n";
    os << "stimulated gross energy flow = " << fmt17(eb.stimulated_gross) << "\n";
    os << "relative imbalance           = "
       << fmt17(eb.stimulated_gross > 0.0 ? eb.stimulated_net / eb.stimulated_gross : 0.0) << "\n";
    os << "unstimulated recoil / event  = " << fmt17(eb.unstimulated_per_scattering) << "\n";
  }
  write_output(os.str(), g.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bose-stimulated light-scattering rate engine"};
  app.set_version_flag("--version", bs::kVersion);
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);

  GlobalOptions g;
  add_global_flags(app, g);

  // rate
  double delta = 0.0, tau = 0.0;
  CLI::App* rate = app.add_subcommand("rate", "Single-point rate breakdown R(delta, tau)");
  rate->add_option("--delta", delta, "Momentum transfer")->required();
  rate->add_option("--tau", tau, "Scaled temperature T/T_c")->required();

  // sweep-tau
  double tau_min = 0.6, tau_max = 2.0, delta_min = 0.01, delta_max = 3.0;
  int steps = 141;
  CLI::App* sweep_t = app.add_subcommand("sweep-tau", "Sweep tau at fixed delta");
  sweep_t->add_option("--delta", delta, "Momentum transfer")->required();
  sweep_t->add_option("--tau-min", tau_min)->capture_default_str();
  sweep_t->add_option("--tau-max", tau_max)->capture_default_str();
  sweep_t->add_option("--steps", steps)->capture_default_str();

  // sweep-delta
  CLI::App* sweep_d = app.add_subcommand("sweep-delta", "Sweep delta at fixed tau");
  sweep_d->add_option("--tau", tau, "Scaled temperature")->required();
  sweep_d->add_option("--delta-min", delta_min)->capture_default_str();
  sweep_d->add_option("--delta-max", delta_max)->capture_default_str();
  sweep_d->add_option("--steps", steps)->capture_default_str();

  // figure1
  std::vector<double> delta_list = {0.03, 0.1, 0.3, 1.0};
  std::string out_dir = ".";
  CLI::App* fig = app.add_subcommand("figure1", "Emit the R(delta, tau) sweep family as CSV");
  fig->add_option("--delta-list", delta_list, "Delta values, one CSV file each")
      ->delimiter(',')
      ->capture_default_str();
  fig->add_option("--tau-min", tau_min)->capture_default_str();
  fig->add_option("--tau-max", tau_max)->capture_default_str();
  fig->add_option("--steps", steps)->capture_default_str();
  fig->add_option("--out", out_dir, "Output directory")->capture_default_str();

  // sumrule
  CLI::App* sumrule = app.add_subcommand("sumrule", "Angle-integrated stimulated enhancement");
  sumrule->add_option("--tau", tau, "Scaled temperature")->required();

  // convert
  double mass_amu = 87.0, wavelength_nm = 780.0, tc_nk = 100.0, angle_mrad = 10.0;
  std::string polarization = "unpolarized";
  CLI::App* convert = app.add_subcommand("convert", "Laboratory units -> (delta, tau) variables");
  convert->add_option("--mass-amu", mass_amu, "Atom mass in amu")->required();
  convert->add_option("--wavelength-nm", wavelength_nm, "Light wavelength in nm")->required();
  convert->add_option("--tc-nk", tc_nk, "Critical temperature in nK")->required();
  convert->add_option("--angle-mrad", angle_mrad, "Scattering angle in mrad")->required();
  convert->add_option("--polarization", polarization,
                      "in_plane|perpendicular|unpolarized")
      ->capture_default_str();

  // oracle
  std::uint64_t samples = 1000000, seed = 0;
  double box_scale = 2.0 * std::numbers::pi / 0.25;
  int max_mode = 32;
  std::vector<int> delta_mode = {2, 0, 0};
  CLI::App* oracle = app.add_subcommand("oracle", "Independent brute-force validators");
  oracle->require_subcommand(1);

  CLI::App* quad3d = oracle->add_subcommand("quad3d", "Direct 3D quadrature of the thermal term");
  quad3d->add_option("--delta", delta)->required();
  quad3d->add_option("--tau", tau)->required();

  CLI::App* mc = oracle->add_subcommand("mc", "Monte Carlo estimate of the thermal term");
  mc->add_option("--delta", delta)->required();
  mc->add_option("--tau", tau)->required();
  mc->add_option("--samples", samples)->capture_default_str();
  mc->add_option("--seed", seed)->capture_default_str();

  CLI::App* boxcmd = oracle->add_subcommand("box", "Discrete momentum-box rate");
  boxcmd->add_option("--tau", tau)->required();
  boxcmd->add_option("--box-scale", box_scale, "Box length L (mode spacing 2 pi / L)")
      ->capture_default_str();
  boxcmd->add_option("--max-mode", max_mode)->capture_default_str();
  boxcmd->add_option("--delta-mode", delta_mode, "Lattice momentum transfer (three integers)")
      ->delimiter(',')
      ->capture_default_str();

  CLI::App* energy = oracle->add_subcommand("energy", "Stimulated energy-balance check");
  energy->add_option("--tau", tau)->required();
  energy->add_option("--box-scale", box_scale)->capture_default_str();
  energy->add_option("--max-mode", max_mode)->capture_default_str();

  // Let global flags (--format, --out, ...) appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    g.finalize();
    if (*rate) return run_rate(g, delta, tau);
    if (*sweep_t)
      return finish_sweep(g, "sweep-tau",
                          bs::sweep_tau(delta, linspace(tau_min, tau_max, steps), g.config));
    if (*sweep_d)
      return finish_sweep(g, "sweep-delta",
                          bs::sweep_delta(tau, linspace(delta_min, delta_max, steps), g.config));
    if (*fig) return run_figure1(g, delta_list, tau_min, tau_max, steps, out_dir);
    if (*sumrule) return run_sumrule(g, tau);
    if (*convert)
      return run_convert(g, mass_amu, wavelength_nm, tc_nk, angle_mrad, polarization);
    if (*quad3d) return run_oracle_quad3d(g, delta, tau);
    if (*mc) return run_oracle_mc(g, delta, tau, samples, seed);
    if (*boxcmd) return run_oracle_box(g, box_scale, max_mode, tau, delta_mode);
    if (*energy) return run_oracle_energy(g, box_scale, max_mode, tau);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const bs::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
