#pragma once

#include <stdexcept>
#include <string>

namespace nsk {

/// Argument outside the physical domain (non-positive volume, unsupported order, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The end states do not form an R1-S2 pattern, or exceed the strength cap.
class PatternError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Shooting for the shock profile failed or produced a non-monotone orbit.
class ProfileError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// CFL violation, vacuum, or non-finite values during time stepping.
class SolverError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Invalid or malformed run configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace nsk
