#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffqt {

// Caller misuse: mismatched signatures, out-of-range ranks, field-gated ops.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition on data (not on call shape) was violated.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)),
        message_(what),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cliffqt
