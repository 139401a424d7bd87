#pragma once

#include <stdexcept>
#include <string>

namespace finmat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ParseError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

// Scope errors map to CLI exit code 2.
struct UnsupportedBound : Error {
  using Error::Error;
};

struct UnsupportedField : Error {
  using Error::Error;
};

struct DegenerateComponent : Error {
  using Error::Error;
};

struct CharacterMismatch : Error {
  using Error::Error;
};

// Internal consistency failures map to CLI exit code 3.
struct InvariantViolation : Error {
  using Error::Error;
};

struct UnfaithfulImage : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

}  // namespace finmat
