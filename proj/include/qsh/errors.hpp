#pragma once

#include <stdexcept>
#include <string>

namespace qsh {

// Base of every error raised by the library. The CLI maps these onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct BadPermutation : Error {
  using Error::Error;
};

// A truncated formal group law was handed a value it cannot expand
// (nonzero constant term, genuine denominator, or an unsupported law).
struct NotTruncatable : Error {
  using Error::Error;
};

// Raised when a shuffle sum that must be polynomial keeps a (λ_s - λ_t) pole.
// This indicates an implementation bug, not a user error.
struct PoleNotCancelled : Error {
  using Error::Error;
};

struct EvaluationPole : Error {
  using Error::Error;
};

struct LimitExceeded : Error {
  using Error::Error;
};

struct EdgeLoopRejected : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace qsh
