#ifndef BOSESCATTER_CONFIG_HPP
#define BOSESCATTER_CONFIG_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace bosescatter {

// Normalization convention for the critical density N_total.  `integral`
// is the value of the defining occupation integral, (2pi)^{3/2} zeta(3/2);
// `paper_constant` keeps the printed 1/2 prefactor, half of that.  The two
// differ by exactly 2x in the stimulated terms.
enum class DensityConvention { integral, paper_constant };

inline DensityConvention density_convention_from_string(const std::string& s) {
  if (s == "integral") return DensityConvention::integral;
  if (s == "paper_constant") return DensityConvention::paper_constant;
  throw std::domain_error("unknown convention '" + s + "' (expected integral|paper_constant)");
}

inline const char* to_string(DensityConvention c) {
  return c == DensityConvention::integral ? "integral" : "paper_constant";
}

// Knobs controlling every numerical evaluation.  Defaults reproduce the
// shipped reference numbers.
struct QuadratureConfig {
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
  DensityConvention n_total_convention = DensityConvention::integral;
  // The radial integrals are truncated at p_max = multiplier * sqrt(2 tau);
  // 8.4 ~ sqrt(2 ln(1/eps_mach)) puts the occupation below machine epsilon.
  double p_truncation_multiplier = 8.4;

  void validate() const {
    if (!(rel_tol > 1e-14) || !(rel_tol < 1e-2))
      throw std::domain_error("rel_tol must lie in (1e-14, 1e-2)");
    if (max_subdivisions < 10) throw std::domain_error("max_subdivisions must be >= 10");
    if (!(p_truncation_multiplier > 0.0))
      throw std::domain_error("p_truncation_multiplier must be positive");
  }

  double p_max(double tau) const { return p_truncation_multiplier * std::sqrt(2.0 * tau); }
};

}  // namespace bosescatter

#endif
