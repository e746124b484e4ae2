#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file, invalid strategy, out-of-range argument.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but outside the class a solver accepts
/// (non-stopping, cyclic, not MAX-acyclic, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Something the theory rules out happened anyway.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ssg
