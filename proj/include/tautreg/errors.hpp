#pragma once

#include <stdexcept>
#include <string>

namespace tautreg {

/// Thrown when a caller passes an argument outside its documented domain
/// (nonpositive regularisation parameter, p < 1 norm exponent, ...).
class invalid_parameter : public std::invalid_argument {
public:
  explicit invalid_parameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when two signals (or a signal and an operator) live on different grids.
class incompatible_grids : public std::invalid_argument {
public:
  explicit incompatible_grids(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a kernel is rejected by a solver path (e.g. nonpositive
/// quadrature weights in the tube DP solver).
class unsupported_kernel : public std::runtime_error {
public:
  explicit unsupported_kernel(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a numerical routine cannot reach its target accuracy.
class numeric_failure : public std::runtime_error {
public:
  numeric_failure(const std::string& what, double achieved_tol)
      : std::runtime_error(what), achieved_tolerance(achieved_tol) {}

  double achieved_tolerance;
};

} // namespace tautreg
