#pragma once

#include <stdexcept>
#include <string>

namespace ebc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (t <= 0, x < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation-specific precondition not met (e.g. delta = 0 where delta > 0 is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Survival probability exhausted, so a conditional rate is undefined.
class SingularStateError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Numerical scheme produced an unphysical state.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace ebc
