#ifndef REYNOLDS_ERROR_HPP
#define REYNOLDS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reynolds {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad field specification, mixed-field operands, division by zero.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Operands whose lengths or ambient dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A functional that does not define a symmetrizing form.
class FormError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid algebra input (non-associative, bad unit, bad JSON).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// A runtime self-check failed. Valid input never triggers this.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class FingerprintError : public Error {
 public:
  using Error::Error;
};

/// Error with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace reynolds

#endif  // REYNOLDS_ERROR_HPP
