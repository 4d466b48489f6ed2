#pragma once

#include <stdexcept>
#include <string>

namespace partrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query needs a value of the characteristic function beyond the known prefix.
class QueryBeyondPrefix : public Error {
 public:
  using Error::Error;
};

/// Seed enumeration was asked for more than 2^24 candidate assignments.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A seed does not satisfy the initial-window equation.
class InvalidSeed : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Weight pair outside the regime the nonexistence search is defined for.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The decomposition guaranteed a witness pair but none was found. This
/// contradicts the lower-bound argument and must never be swallowed.
class NoWitness : public Error {
 public:
  using Error::Error;
};

/// An internal invariant of a computed object was violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace partrep
