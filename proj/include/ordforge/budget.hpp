#pragma once

#include <cstddef>

namespace ordforge {

// Caps for exact big-number evaluation. Exceeding either cap is reported as
// an Overflow value (std::nullopt), never as an exception: Goodstein runs at
// Ackermann scale must degrade gracefully.
struct EvalBudget {
  std::size_t max_bits = 4096;
  std::size_t max_steps = 1'000'000;
};

}  // namespace ordforge
