#pragma once

#include <stdexcept>

namespace gpsched {

/// Linear-algebra breakdown that survived jitter escalation (singular
/// observed submatrix, failed factorization, ...).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal-state contract broken by the caller (completing a model that is
/// not running, asking for the EI of an already observed model, ...).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gpsched
