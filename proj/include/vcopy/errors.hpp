#pragma once

#include <stdexcept>
#include <string>

namespace vcopy {

/// Base of every error the engine raises. `kind()` is the machine-readable tag
/// emitted by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class MalformedInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "malformed-input"; }
};

class MalformedSpec : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
  const char* kind() const noexcept override { return "malformed-spec"; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

class NotApplicable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-applicable"; }
};

class LimitDoesNotExist : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "limit-does-not-exist"; }
};

class UndefinedLeadingPart : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "undefined-leading-part"; }
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degree-overflow"; }
};

/// Raised when an identity that must hold for a correct input does not, e.g. a
/// characteristic-polynomial coefficient that fails the invariance test.
class ConsistencyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal-consistency"; }
};

}  // namespace vcopy
