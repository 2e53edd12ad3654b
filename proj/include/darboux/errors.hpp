#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darboux {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input from the caller: malformed text, violated preconditions,
/// mismatched fields or variable sets. The CLI maps these to exit status 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when two operands live over different coefficient fields.
class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Parse failure with a 1-based line/column.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grading-based operations require deg V >= 3.
class GradingUnavailable : public InputError {
 public:
  using InputError::InputError;
};

/// Hypotheses of a structural operation are not met.
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical invariant that must hold failed. Always a bug;
/// the CLI maps these to exit status 2.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace darboux
