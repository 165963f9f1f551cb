#ifndef BOSESCATTER_QUADRATURE_HPP
#define BOSESCATTER_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "bosescatter/errors.hpp"

namespace bosescatter {

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error bound
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b].  The interval
// is pre-split at the interior breakpoints (points outside (a, b) are
// ignored), then the worst interval is bisected until the accumulated error
// estimate satisfies  error <= max(abs_tol, rel_tol * |value|)  or the
// subdivision budget runs out, in which case ConvergenceError is thrown.
// Endpoint values of f are never requested (open rule), so integrable
// endpoint singularities are allowed.
IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  const std::vector<double>& breakpoints, double rel_tol,
                                  double abs_tol, int max_subdivisions);

}  // namespace bosescatter

#endif
