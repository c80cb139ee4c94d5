#pragma once

#include <stdexcept>
#include <string>

namespace kneserlab {

/// Base of every error thrown by the library. The C API maps each subclass
/// to a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (instance, hypergraph or complex files).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A precondition on arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size guard or node budget was exceeded. Never accompanied by a partial answer.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A mechanical check that must hold failed; indicates a bug or a false claim.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace kneserlab
