#pragma once

#include <stdexcept>
#include <string>

namespace pog {

/// Bad input: malformed graph, violated precondition, unknown option.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to work above its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search showed that nothing with the requested properties exists.
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is a well-formed graph but not pseudo-outerplanar.
class NotPseudoOuterplanar : public std::runtime_error {
 public:
  NotPseudoOuterplanar() : std::runtime_error("not pseudo-outerplanar") {}
};

}  // namespace pog
