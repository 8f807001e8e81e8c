#pragma once

#include <stdexcept>
#include <string>

namespace cmweil {

// All library failures derive from Error so callers (the CLI in particular)
// can map each category onto a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// r does not split completely in the CM-field (or is ramified there).
class NotSplitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Elements from two different number fields were combined.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

// An operation required an integral element (or a denominator prime to the
// modulus) and did not get one.
class NonIntegralError : public Error {
 public:
  using Error::Error;
};

// Numerical root isolation or reconstruction did not succeed within the
// allowed precision budget.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A randomized search gave up after its iteration cap.
class MaxItersExceeded : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the caller's candidate budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cmweil
