#ifndef EMLTAB_DEADLINE_HPP
#define EMLTAB_DEADLINE_HPP

#include <chrono>
#include <stdexcept>

namespace emltab {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit exceeded") {}
};

/// Cooperative time limit.  Long-running loops call check() periodically.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;  // never expires
  explicit Deadline(std::chrono::milliseconds budget) : at_(Clock::now() + budget), armed_(true) {}

  bool expired() const { return armed_ && Clock::now() >= at_; }
  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  Clock::time_point at_{};
  bool armed_ = false;
};

}  // namespace emltab

#endif  // EMLTAB_DEADLINE_HPP
