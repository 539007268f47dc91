#pragma once

#include <stdexcept>
#include <string>

namespace hanle {

/// Invalid quantum numbers or out-of-range arguments to a pure function.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A SystemParams bundle that violates its invariants.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Singular / ill-conditioned linear system, or a solution that fails its
/// post-conditions.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite state encountered during time integration.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hanle
