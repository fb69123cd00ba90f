#include "cohesive/deadline.hpp"

namespace cohesive {

namespace {

thread_local bool active = false;
thread_local std::chrono::steady_clock::time_point deadline;
thread_local unsigned calls = 0;

}  // namespace

DeadlineScope::DeadlineScope(std::chrono::duration<double> budget)
    : had_previous_(active), previous_(deadline) {
  active = true;
  deadline = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
}

DeadlineScope::~DeadlineScope() {
  active = had_previous_;
  deadline = previous_;
}

void poll_deadline() {
  if (!active) return;
  if ((++calls & 63u) != 0) return;
  if (std::chrono::steady_clock::now() > deadline) throw Timeout();
}

}  // namespace cohesive
