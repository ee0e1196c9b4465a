#pragma once

#include <stdexcept>
#include <string>

namespace gehrhart {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input matrix does not have full row rank.
class RankDeficientError : public Error {
 public:
  using Error::Error;
};

// A desk-scale enumeration guard was exceeded. The message names the guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Operation precondition violated (deleting a coloop, contracting a loop,
// palindrome check on a non-Gorenstein matroid, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A formula that requires a unimodular realization was given something else.
class UnimodularityError : public Error {
 public:
  using Error::Error;
};

// Arithmetic produced something that can only come from a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gehrhart
