#pragma once

#include <stdexcept>
#include <string>

namespace ehcert {

/// Malformed or out-of-contract input (bad file, unknown id, missing labels).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A step that the underlying proof guarantees could not be carried out.
/// Seeing one of these means a bug, not a bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ehcert
