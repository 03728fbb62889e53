#pragma once

#include <cstdint>
#include <ostream>

#include "bfdx/bayes_factors.hpp"

namespace bfdx {

// Scenario for the plot-data emitters. The shared sample mean is the one
// that makes the Robert BF equal q at the base sample size n, so the
// figure-2 pair varies n at a fixed mean.
struct FigureScenario {
  double q = 3.0;
  std::int64_t n = 5000;   // base curve
  std::int64_t n2 = 10000; // second curve (figure 2 only)
};

// Writes CSV rows sampling log point_bf(0, mu, s) on 1001 evenly spaced
// mu in [-0.02, 0.10], with constant log q and log(1/q) reference columns.
// Figure 1 emits one curve (columns mu,log_bf,log_q,log_inv_q); figure 2
// emits both curves with an extra n column. Returns the data row count.
std::int64_t emit_figure_data(int figure, const FigureScenario& scenario,
                              std::ostream& out);

}  // namespace bfdx
