#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netcover {

/// Malformed graph input. `line()` is 1-based, 0 when the error is not tied
/// to a particular line (e.g. empty input or a JSON syntax error).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A node label that is not part of the graph.
class LookupError : public std::out_of_range {
 public:
  explicit LookupError(const std::string& label)
      : std::out_of_range("unknown node '" + label + "'"), label_(label) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

}  // namespace netcover
