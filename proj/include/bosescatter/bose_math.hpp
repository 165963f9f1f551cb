#ifndef BOSESCATTER_BOSE_MATH_HPP
#define BOSESCATTER_BOSE_MATH_HPP

#include <cmath>
#include <stdexcept>

namespace bosescatter {

// Fugacity of the ideal Bose gas, lambda = exp(mu/tau).  Physical range is
// [0, 1]; lambda > 1 has no equilibrium meaning and is rejected at
// construction.  The log is cached because every occupation evaluation
// needs it.
class Fugacity {
 public:
  explicit Fugacity(double value) : value_(value) {
    if (!(value >= 0.0) || value > 1.0)
      throw std::domain_error("fugacity must lie in [0, 1]");
    log_value_ = (value > 0.0) ? std::log(value) : -1.0 / 0.0;
  }

  double value() const { return value_; }
  double log_value() const { return log_value_; }
  bool is_condensed() const { return value_ == 1.0; }

 private:
  double value_;
  double log_value_;
};

// zeta(3/2) = sum n^{-3/2}, evaluated once by series acceleration with an
// integral tail bound; accurate to ~1e-13 relative.
double zeta_three_halves();

// g_{3/2}(lambda) = sum_{n>=1} lambda^n / n^{3/2}, for lambda in [0, 1].
// Relative error <= 1e-10.  Strictly increasing.
double polylog_g32(const Fugacity& lambda);
double polylog_g32(double lambda);

// Mean occupancy 1/(lambda^{-1} exp(p^2/2tau) - 1) of the single-particle
// state with kinetic variable p^2, at scaled temperature tau.  The p = 0
// state at lambda = 1 is excluded (it is the condensate, handled
// separately); that combination raises std::domain_error.
double occupation(double p_squared, double tau, const Fugacity& lambda);

}  // namespace bosescatter

#endif
