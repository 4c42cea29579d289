#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpow {

/// Invalid graph construction or an operation outside its parameter range.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 input. `line()` is 0 when the text did not come from a stream.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Eigensolver failed to converge, or a power sum is undefined.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpow
