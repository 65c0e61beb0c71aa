#pragma once

#include <stdexcept>
#include <string>

namespace dualcx {

/// Malformed or out-of-contract input: bad files, unknown labels, violated
/// preconditions a caller could have avoided.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that the construction guarantees did not hold. Always a bug
/// or a misuse of an internal entry point; carries the witness in the message.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dualcx
