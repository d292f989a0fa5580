#pragma once

#include <stdexcept>
#include <string>

namespace supertrop {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed: division by zero, a singular
/// matrix, a non-symmetric form where symmetry is required, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not fit together.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input exceeds a documented size cap (e.g. rank enumeration beyond 10x10).
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Text or JSON input does not follow the scalar/matrix grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace supertrop
