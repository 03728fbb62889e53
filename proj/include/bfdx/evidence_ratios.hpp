#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bfdx/bayes_factors.hpp"

namespace bfdx {

// Parameter regions where the evidence ratio clears q (support) or falls
// under 1/q (rejection). Builders keep the two families pairwise disjoint.
struct RegionSet {
  std::vector<Interval> support;
  std::vector<Interval> rejection;
  Threshold threshold;
};

// Log evidence ratio for mu under an N(0,1) prior carrying the weight of
// one observation: (xbar^2 - n (xbar - mu)^2 + log n) / 2. This large-n
// form is the reference everywhere paper-facing numbers are reproduced.
double gaussian_log_er(const GaussianSummary& s, double mu);

// Exact conjugate counterpart (posterior N(n xbar/(n+1), 1/(n+1)) density
// over N(0,1) prior density), provided for comparison:
// (log(n+1) - n (xbar - mu)^2 + n xbar^2/(n+1)) / 2.
double gaussian_log_er_exact(const GaussianSummary& s, double mu);

// The nonnegative mean with gaussian_log_er(s, 0) = log q:
// sqrt((log n - 2 log q)/(n - 1)). Infeasible when log n < 2 log q.
double gaussian_required_mean(const Threshold& q, std::int64_t n);

// Where gaussian_log_er >= log q: xbar +- sqrt((xbar^2 + log n - 2 log q)/n),
// empty when the radicand is nonpositive.
Interval gaussian_support_region(const GaussianSummary& s, const Threshold& q);

// With xbar = gaussian_required_mean(q, n), the two mu whose evidence
// ratio is exactly 1/q:
// xbar +- sqrt((2 log q (n-2) + n log n)/(n (n-1))). The pair straddles
// both 0 and xbar, and its separation shrinks as n grows.
std::pair<double, double> quandary_pair(std::int64_t n, const Threshold& q);

// Binomial evidence ratio under a uniform prior: the posterior density
// (n+1) C(n,k) theta^k (1-theta)^(n-k) over the prior density 1.
double binom_er(double theta, const BinomialData& d);

// The theta-interval where binom_er >= q; endpoints located by root
// finding on either side of the mode k/n. Empty when the peak stays
// under q.
Interval binom_support_region(const BinomialData& d, const Threshold& q,
                              const Tolerance& tol = {});

// ER(theta, x) = B(theta, theta0, x) * ER(theta0, x).
double er_from_point_bf(double point_bf_value, double er_at_null);

// Support and rejection regions for one dataset at one threshold.
RegionSet gaussian_regions(const GaussianSummary& s, const Threshold& q);
RegionSet binom_regions(const BinomialData& d, const Threshold& q,
                        const Tolerance& tol = {});

}  // namespace bfdx
