#pragma once

#include <cstdint>

namespace nsv {

// Counts likelihood evaluations; incremented exactly once per call.
// Single-owner mutable state, one per run.
struct EvalCounter {
  std::uint64_t n_evaluations = 0;

  void increment() { ++n_evaluations; }
};

}  // namespace nsv
