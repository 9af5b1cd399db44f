#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "sudoku/error.hpp"

namespace sudoku {

/// Optional wall-clock budget threaded through the exponential searches.
/// `poll()` is cheap: it only reads the clock every 4096 calls.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}

  static Deadline after(std::chrono::duration<double> budget) {
    return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget));
  }
  static Deadline never() { return Deadline(); }

  bool bounded() const noexcept { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

  /// Throws TimeoutError once the budget is spent.
  void poll() const {
    if (!at_) return;
    if ((++ticks_ & 0xFFF) != 0) return;
    if (Clock::now() >= *at_) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> at_;
  mutable std::uint32_t ticks_ = 0;
};

}  // namespace sudoku
