#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colonlab {

// Caller passed something the operation is not defined for (mixed rings,
// negative exponents, zero divisor ideals for colon, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of a verifier does not hold for the input
// (not Artinian, not homogeneous, not Gorenstein, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Signals a broken internal invariant. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace colonlab
