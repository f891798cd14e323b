#pragma once

#include <stdexcept>

namespace bell {

// Parameter outside the supported domain of an operation. CLI exit code 2.
struct UnsupportedParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search would exceed the configured budget. CLI exit code 3.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pointwise cross-check that must hold did not. CLI exit code 4.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bell
