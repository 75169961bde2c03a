#pragma once

#include <stdexcept>
#include <string>

namespace metric1 {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad ids, mismatched shapes).
class InputError : public Error {
 public:
  using Error::Error;
};

// An operation was called on data that does not meet its documented
// requirements (e.g. a functor that is not a contraction).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured candidate bound.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// A construction produced a result that fails its own post-condition.
// On valid inputs this indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace metric1
