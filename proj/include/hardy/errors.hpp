#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Bad input: out-of-range parameter, malformed spec, grid mismatch.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at a point where a factor is undefined (an atom's boundary point).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fractional power was requested for a value outside the open right half-plane.
class BranchViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed identity that must hold failed beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial that must be zero-free in the open disk has a root inside it.
class OuternessViolation : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace hardy
