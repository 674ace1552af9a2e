#pragma once

#include <stdexcept>

namespace grover {

/// Rotation angle too close to 0 or pi for a well-defined axis (sin(phi) <= eps).
struct DegenerateRotation : std::domain_error {
  using std::domain_error::domain_error;
};

/// Coherence ratio requested where the initial coherence vanishes (xi = 0 or
/// lambda in {0, 1}); the ratio would divide by zero.
struct UndefinedCoherence : std::domain_error {
  using std::domain_error::domain_error;
};

/// No lambda in the scanned range meets the requested success threshold.
struct NoFeasibleRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grover
