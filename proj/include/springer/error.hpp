#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad family/rank combination or unparsable type string.
class TypeError : public Error {
 public:
  using Error::Error;
};

// Bad argument such as a non-prime l or an unsupported type for an operation.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A central character that does not exist for the requested (type, l).
class InvalidCharacterError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Group too large for exhaustive enumeration under the current budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Embedded data failed a checksum or structural check.
class DataError : public Error {
 public:
  using Error::Error;
};

// An internal identity failed; signals a logic or data bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace springer
