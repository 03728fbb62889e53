#pragma once

#include <cstdint>

#include "bfdx/bayes_factors.hpp"

namespace bfdx {

// Full diagnosis of one (xbar, n, q) configuration: the conventional
// vague-alternative BF, the mu-interval whose point BFs exceed q against
// the null, and whether both conditions hold at once.
struct LindleyReport {
  BfKind kind;
  double conventional_bf;
  Interval counter_interval;
  bool is_lindley_case;
  Threshold q;
};

// The |mean| range on which the kind's vague BF clears q while the
// counter-interval of mu_bounds is nonempty: lower endpoint
// sqrt(2 log q / n), upper endpoint the mean at which the vague BF equals
// q. Empty when the lower endpoint exceeds the upper; infeasibility of
// the upper-endpoint inversion propagates.
Interval lindley_mean_range(std::int64_t n, const Threshold& q, BfKind kind,
                            const BfParams& params = {},
                            const Tolerance& tol = {});

// The vague-BF values attainable across lindley_mean_range: [q, BF at the
// range's lower endpoint]. Throws InfeasibleError when the mean range is
// empty.
Interval lindley_bf_range(std::int64_t n, const Threshold& q, BfKind kind,
                          const BfParams& params = {},
                          const Tolerance& tol = {});

// Probability of drawing a mean inside the (two-sided) Lindley range when
// the null is true and mean ~ N(0, 1/n): 2 (Phi(b sqrt n) - Phi(a sqrt n));
// 0 when the range is empty or the vague BF never reaches q.
double lindley_probability(std::int64_t n, const Threshold& q, BfKind kind,
                           const BfParams& params = {},
                           const Tolerance& tol = {});

// Large-n limit of lindley_probability: erfc(sqrt(log q)), i.e.
// 2 - erfc(-sqrt(log q)). Defined for q >= 1.
double lindley_asymptote(double q);
double lindley_asymptote(const Threshold& q);

// Evaluates the conventional BF and the counter-interval at s and flags
// their conjunction. Symmetric in the sign of the mean; the
// counter-interval is reported on the side of the observed mean.
LindleyReport detect_lindley_case(const GaussianSummary& s, const Threshold& q,
                                  BfKind kind, const BfParams& params = {},
                                  const Tolerance& tol = {});

}  // namespace bfdx
