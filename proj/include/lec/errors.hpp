#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed files, out-of-range ids, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure in a text or JSON input, carrying the 1-based line number
/// (0 when the location is not line-oriented).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An exponential routine was asked to run above its configured size guard.
class GuardExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// An exact search ran out of its node budget before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal consistency breach. Raised instead of ever returning a wrong answer.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lec
