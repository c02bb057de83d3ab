#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace strongcolor {

// Wall-clock budget shared by the exact solvers. Polling the clock is cheap
// relative to a search node but not free, so callers poll through tick().
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline none() { return {}; }
  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    return d;
  }

  bool bounded() const { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

  /// Polls the clock once every 1024 calls.
  bool tick() {
    if (!at_) return false;
    if ((++ticks_ & 1023u) != 0) return false;
    return Clock::now() >= *at_;
  }

 private:
  std::optional<Clock::time_point> at_;
  std::uint64_t ticks_ = 0;
};

}  // namespace strongcolor
