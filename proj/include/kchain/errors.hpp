#pragma once

#include <stdexcept>
#include <string>

namespace kchain {

/// Raised when an argument violates an operation's precondition
/// (out-of-range index, n < 1, inconsistent (r, d) pair, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class DisconnectedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A proven identity failed to hold. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kchain
