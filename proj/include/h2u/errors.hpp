#pragma once

#include <stdexcept>

namespace h2u {

// Invalid input to the arithmetic layer.  The CLI maps every DomainError to
// exit code 2.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonCoprimeError : DomainError {
  using DomainError::DomainError;
};

struct InvalidParameterError : DomainError {
  using DomainError::DomainError;
};

struct DegenerateFractionError : DomainError {
  using DomainError::DomainError;
};

// Raised when an operation needs an odd-order (c1-labeled) table but the
// space has even order.
struct EvenOrderError : DomainError {
  using DomainError::DomainError;
};

struct NonUnitError : DomainError {
  using DomainError::DomainError;
};

struct OutOfRangeError : DomainError {
  using DomainError::DomainError;
};

struct MismatchedOrderError : DomainError {
  using DomainError::DomainError;
};

struct TrivialSummandError : DomainError {
  using DomainError::DomainError;
};

// Internal invariant violation (a bug, not bad input); CLI exit code 3.
struct SymmetryFailureError : std::logic_error {
  using std::logic_error::logic_error;
};

// Cache/file problems in the CLI; exit code 4.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace h2u
