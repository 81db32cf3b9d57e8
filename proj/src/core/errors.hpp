#pragma once

#include <stdexcept>
#include <string>

namespace stepswitch {

// Quadrature or series evaluation failed to reach the requested tolerance.
struct NumericError : std::runtime_error {
  double achieved;
  NumericError(const std::string& msg, double achieved_estimate)
      : std::runtime_error(msg), achieved(achieved_estimate) {}
};

// The exponentially large branch of w(z) left the double range.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stepswitch
