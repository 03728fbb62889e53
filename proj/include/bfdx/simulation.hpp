#pragma once

#include <cstdint>

#include "bfdx/lindley.hpp"

namespace bfdx {

struct SimulationResult {
  std::uint64_t reps;
  std::uint64_t hits;
  double rate;       // hits / reps
  double std_error;  // sqrt(rate (1 - rate) / reps)
  std::uint64_t seed;
};

// Monte Carlo estimate of lindley_probability under the true null: draws
// mean ~ N(0, 1/n) and counts detect_lindley_case hits.
//
// Draws come from a counter-based uniform stream (splitmix-style hash of
// seed and draw index) pushed through the normal quantile, so a given
// (inputs, seed) pair yields bit-identical results on every run and for
// every worker count. Work is partitioned in fixed-size blocks of draw
// indices; workers = 0 uses the hardware concurrency.
SimulationResult simulate_lindley_rate(std::int64_t n, const Threshold& q,
                                       BfKind kind, std::uint64_t reps,
                                       std::uint64_t seed,
                                       const BfParams& params = {},
                                       unsigned workers = 0);

}  // namespace bfdx
