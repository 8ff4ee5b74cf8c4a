#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace thetasat {

// Raised when an argument violates an operation's precondition.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a series would need more than max_terms terms to certify the
// requested tolerance.
class precision_unattainable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard cap on the one-sided index of any truncated lattice sum.
inline constexpr long max_terms = 1'000'000;

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw invalid_argument(message);
}

inline void require_tolerance(double tol) {
  require(std::isfinite(tol) && tol > 0.0, "tolerance must be positive and finite");
}

}  // namespace detail
}  // namespace thetasat
