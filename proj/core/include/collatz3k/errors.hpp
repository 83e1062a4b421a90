#pragma once

#include <stdexcept>

namespace collatz3k {

// The closed-form evaluators report inconsistent inputs with distinct types
// so callers can tell a profile/value mismatch from a zero denominator.
struct NonIntegerResultError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPowerOfTwoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when the cycle-entry taxonomy fails to match a terminating orbit.
// That would contradict the predecessor structure the taxonomy rests on,
// so it must surface loudly instead of being mapped to a catch-all tag.
struct InternalInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

struct CheckpointIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Existing checkpoint belongs to a different sweep configuration.
struct CheckpointMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace collatz3k
