#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orla {

/// Syntax error with source location and the token set that would have been
/// accepted at that point.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {})
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Malformed input file or a value that violates a container invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of a motive that is not declared in the activity system.
class UnknownMotiveError : public std::invalid_argument {
 public:
  explicit UnknownMotiveError(const std::string& motive)
      : std::invalid_argument("unknown motive: " + motive) {}
};

/// Precondition failure: the observed model does not complete the activity.
class NotCompletedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition failure: the activity is not achievable from the observation.
class NotAchievableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orla
