#pragma once

#include <stdexcept>

namespace fracorder {

/// Raised when Gamma is evaluated at (or within 1e-12 of) a nonpositive integer.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive refinement or series summation gave up before reaching tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracorder
