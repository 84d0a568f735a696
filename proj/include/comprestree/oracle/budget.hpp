#pragma once

#include <chrono>
#include <cstddef>
#include <string>

#include "comprestree/error.hpp"

namespace comprestree::oracle {

// Size limits for the exhaustive solvers. Exceeding one is an error, never a
// silent skip.
struct OracleBudget {
  std::size_t restricted_sensors = 8;
  std::size_t unrestricted_sensors = 5;
  std::size_t steiner_terminals = 12;
  std::size_t cds_universe = 20;
  double seconds_per_call = 120.0;
};

inline void require(std::size_t have, std::size_t limit, const char* what) {
  if (have > limit)
    throw Error(ErrorCode::BudgetExceeded,
                std::string(what) + ": " + std::to_string(have) + " exceeds budget " + std::to_string(limit));
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                   std::chrono::duration<double>(seconds))) {}
  void check() {
    if ((++ticks_ & 0xFFFF) == 0 && std::chrono::steady_clock::now() > end_)
      throw Error(ErrorCode::BudgetExceeded, "oracle time ceiling reached");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  unsigned long ticks_ = 0;
};

}  // namespace comprestree::oracle
