#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathalg {

// A request that is well-formed but mathematically invalid: ring mismatch,
// a cyclic graph handed to the classifier, a zero element handed to a
// reduction, and so on.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based; 0 means "unknown".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pathalg
