#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace cohesive {

// Raised when a computation outlives the active DeadlineScope.
class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("time budget exceeded") {}
};

// Raised when an enumeration or construction exceeds its size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Installs a wall-clock deadline for the current thread. The long-running
/// loops of every model call poll_deadline(), which throws Timeout once the
/// deadline has passed. Scopes nest; the innermost one wins.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::duration<double> budget);
  ~DeadlineScope();

  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  bool had_previous_;
  std::chrono::steady_clock::time_point previous_;
};

void poll_deadline();

}  // namespace cohesive
