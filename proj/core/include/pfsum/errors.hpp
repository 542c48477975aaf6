#pragma once

#include <stdexcept>
#include <string>

namespace pfsum {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at (or numerically on top of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two nodes of a decomposition coincide.
class DuplicateNodeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series required by the operation does not converge.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pfsum
