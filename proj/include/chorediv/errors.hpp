#pragma once

#include <stdexcept>
#include <string>

namespace chorediv {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A chore index outside [0, m).
class InvalidChore : public Error {
 public:
  using Error::Error;
};

// Marginal queried for a chore already in the bundle.
class ChoreAlreadyPresent : public Error {
 public:
  using Error::Error;
};

// An exhaustive validator or enumerator was asked to sweep a state space
// beyond its configured bound.
class TooLargeForExhaustiveCheck : public Error {
 public:
  using Error::Error;
};

// A solver requiring certified binary-supermodular costs was handed an
// instance whose certification flag is unset.
class UncertifiedCosts : public Error {
 public:
  using Error::Error;
};

// An internal guarantee failed; indicates a bug or an oracle that does not
// satisfy the properties it was certified for.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

// A solver requiring identical cost functions was handed agents with
// differing specs.
class NotIdenticalCosts : public Error {
 public:
  using Error::Error;
};

// Allocation bundles overlap, exceed the chore range, or have the wrong
// bundle count.
class InvalidAllocation : public Error {
 public:
  using Error::Error;
};

// A parameter is outside its documented domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// An instance or allocation document does not match the file schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A cost spec violates its structural invariants or fails an exhaustive
// property check requested by the caller.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// No single chore removal decrements the bundle cost; certifies that the
// oracle is not supermodular.
class NoDecrementFound : public Error {
 public:
  using Error::Error;
};

// The allocation handed to the rebalancer is not social-cost minimizing.
class InputNotSCM : public Error {
 public:
  using Error::Error;
};

}  // namespace chorediv
