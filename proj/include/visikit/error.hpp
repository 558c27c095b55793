#ifndef VISIKIT_ERROR_HPP_
#define VISIKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace visikit {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input violates an operation's precondition (bad ids,
// malformed files, infeasible generator parameters, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when a vertex set does not have the property an operation requires,
// e.g. an extraction handed a set that is not a mu-set.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

// Raised when a checked postcondition of a construction or extraction
// fails. Seeing one means a bug in this library, not bad input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace visikit

#endif  // VISIKIT_ERROR_HPP_
