#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sudoku {

/// Malformed textual input (graph6, edge lists, family specs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A caller violated an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A per-computation time budget ran out.
class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit exceeded") {}
};

}  // namespace sudoku
