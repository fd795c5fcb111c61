#pragma once

#include <stdexcept>
#include <string>

namespace acre {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Root bracketing or iteration failure.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical results that contradict each other (e.g. a probability above 1).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation not defined for the given boundary condition or regime.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acre
