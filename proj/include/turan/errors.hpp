#pragma once

#include <stdexcept>

namespace turan {

// Input that violates a documented precondition or schema.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A desk-scale size guard was exceeded. Distinct from InvalidInput so
// callers can map it to its own exit code.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace turan
