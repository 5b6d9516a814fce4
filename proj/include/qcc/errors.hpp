// errors.hpp: exception types separating bad input from numerical failure.
#pragma once

#include <stdexcept>
#include <string>

namespace qcc {

// Malformed model files or option values. CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation that could not be certified (residuals, conditioning,
// step-size trouble). CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The Liouvillian kernel has dimension > 1, so "the" steady state is not
// well defined and no representative is picked.
struct DegenerateSteadyState : NumericError {
  using NumericError::NumericError;
};

}  // namespace qcc
