#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bosescatter/errors.hpp"
#include "bosescatter/lab_units.hpp"
#include "bosescatter/oracle.hpp"
#include "bosescatter/scattering.hpp"
#include "bosescatter/version.hpp"

namespace py = pybind11;
namespace bs = bosescatter;

namespace {

bs::QuadratureConfig make_config(double rel_tol, int max_subdivisions,
                                 const std::string& convention, double p_truncation) {
  bs::QuadratureConfig c;
  c.rel_tol = rel_tol;
  c.max_subdivisions = max_subdivisions;
  c.n_total_convention = bs::density_convention_from_string(convention);
  c.p_truncation_multiplier = p_truncation;
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bose-stimulated light-scattering rate engine";
  m.attr("__version__") = bs::kVersion;

  py::register_exception<bs::ConvergenceError>(m, "ConvergenceError");

  py::class_<bs::QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init(&make_config), py::arg("rel_tol") = 1e-8,
           py::arg("max_subdivisions") = 2000, py::arg("convention") = "integral",
           py::arg("p_truncation") = 8.4)
      .def_readonly("rel_tol", &bs::QuadratureConfig::rel_tol)
      .def_readonly("max_subdivisions", &bs::QuadratureConfig::max_subdivisions)
      .def_readonly("p_truncation_multiplier", &bs::QuadratureConfig::p_truncation_multiplier);

  py::class_<bs::RateBreakdown>(m, "RateBreakdown")
      .def_readonly("unstimulated", &bs::RateBreakdown::unstimulated)
      .def_readonly("thermal_thermal", &bs::RateBreakdown::thermal_thermal)
      .def_readonly("condensate", &bs::RateBreakdown::condensate)
      .def_readonly("total", &bs::RateBreakdown::total)
      .def_readonly("quadrature_error", &bs::RateBreakdown::quadrature_error)
      .def("__repr__", [](const bs::RateBreakdown& r) {
        return "RateBreakdown(total=" + std::to_string(r.total) + ")";
      });

  m.def("zeta_three_halves", &bs::zeta_three_halves);
  m.def(
      "polylog_g32", [](double lam) { return bs::polylog_g32(lam); }, py::arg("lam"));
  m.def(
      "occupation",
      [](double p_squared, double tau, double lam) {
        return bs::occupation(p_squared, tau, bs::Fugacity(lam));
      },
      py::arg("p_squared"), py::arg("tau"), py::arg("lam"));

  m.def(
      "critical_density",
      [](const std::string& convention) {
        return bs::critical_density(bs::density_convention_from_string(convention));
      },
      py::arg("convention") = "integral");
  m.def("condensate_fraction", &bs::condensate_fraction, py::arg("tau"));
  m.def(
      "fugacity", [](double tau) { return bs::fugacity(tau).value(); }, py::arg("tau"));
  m.def(
      "near_critical_expansion",
      [](double tau) { return bs::near_critical_expansion(tau).value(); }, py::arg("tau"));

  m.def(
      "total_rate",
      [](double delta, double tau, const bs::QuadratureConfig& config) {
        return bs::total_rate(bs::ScaledPoint(delta, tau), config);
      },
      py::arg("delta"), py::arg("tau"), py::arg("config") = bs::QuadratureConfig{});
  m.def(
      "sum_rule",
      [](double tau, const bs::QuadratureConfig& config) { return bs::sum_rule(tau, config); },
      py::arg("tau"), py::arg("config") = bs::QuadratureConfig{});
  m.def(
      "sweep_tau",
      [](double delta, const std::vector<double>& grid, const bs::QuadratureConfig& config) {
        py::list out;
        for (const auto& row : bs::sweep_tau(delta, grid, config)) {
          py::dict d;
          d["delta"] = row.delta;
          d["tau"] = row.tau;
          d["ok"] = row.ok;
          if (row.ok)
            d["rate"] = row.rate;
          else
            d["error"] = row.error;
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("delta"), py::arg("tau_grid"), py::arg("config") = bs::QuadratureConfig{});

  m.def(
      "term2b_quadrature_3d",
      [](double delta, double tau, const bs::QuadratureConfig& config) {
        const bs::ThermoState thermo = bs::ThermoState::at(tau, config.n_total_convention);
        const auto v = bs::term2b_quadrature_3d(bs::ScaledPoint(delta, tau), thermo, config);
        return py::make_tuple(v.value, v.error);
      },
      py::arg("delta"), py::arg("tau"), py::arg("config") = bs::QuadratureConfig{});
  m.def(
      "term2b_monte_carlo",
      [](double delta, double tau, std::uint64_t samples, std::uint64_t seed) {
        const bs::ThermoState thermo = bs::ThermoState::at(tau);
        const auto mc = bs::term2b_monte_carlo(bs::ScaledPoint(delta, tau), thermo, samples, seed);
        return py::make_tuple(mc.estimate, mc.std_error);
      },
      py::arg("delta"), py::arg("tau"), py::arg("samples") = 1000000, py::arg("seed") = 0);

  m.def(
      "scaled_photon_momentum",
      [](double mass_amu, double wavelength_nm, double tc_nk) {
        return bs::scaled_photon_momentum(
            bs::LabParameters(mass_amu * bs::constants::atomic_mass_unit, wavelength_nm * 1e-9,
                              tc_nk * 1e-9));
      },
      py::arg("mass_amu"), py::arg("wavelength_nm"), py::arg("tc_nk"));
  m.def("delta_from_angle", &bs::delta_from_angle, py::arg("theta"), py::arg("k"));
  m.def("angle_from_delta", &bs::angle_from_delta, py::arg("delta"), py::arg("k"));
  m.def(
      "polarization_factor",
      [](double theta, const std::string& mode) {
        return bs::polarization_factor(theta, bs::polarization_mode_from_string(mode));
      },
      py::arg("theta"), py::arg("mode") = "unpolarized");
}
