#pragma once

#include <stdexcept>
#include <string>

namespace unitsq {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of the operation
/// (non-squarefree radicand, even modulus, mismatched fields, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A number-theoretic hypothesis of a statement does not hold for the input.
/// The message names the violated hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace unitsq
