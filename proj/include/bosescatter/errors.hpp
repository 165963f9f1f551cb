#ifndef BOSESCATTER_ERRORS_HPP
#define BOSESCATTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bosescatter {

// Thrown when an adaptive quadrature or a root finder exhausts its
// iteration/subdivision budget without meeting the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bosescatter

#endif
