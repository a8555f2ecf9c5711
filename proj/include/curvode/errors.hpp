#pragma once

#include <stdexcept>

namespace curvode {

// Raised when a symbolic expansion would exceed the configured size cap.
// Callers can fall back to numeric determinant evaluation.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace curvode
