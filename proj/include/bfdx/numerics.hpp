#pragma once

#include <cstdint>
#include <functional>

#include "bfdx/errors.hpp"

namespace bfdx {

// Tolerances plus an iteration budget for the iterative routines below.
// The defaults leave roughly two orders of magnitude of margin under
// quantities quoted to 4-6 significant figures.
struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_iter = 200;

  Tolerance() = default;
  Tolerance(double abs_tol_in, double rel_tol_in, int max_iter_in);
};

// log Gamma(x) for x > 0. Relative error well under 1e-12 on [0.5, 1e6].
double ln_gamma(double x);

// log of the binomial coefficient C(n, k), 0 <= k <= n, in log space.
// Symmetric in k <-> n-k exactly as computed.
double ln_choose(std::int64_t n, std::int64_t k);

// Standard normal CDF via the complementary error function.
double std_normal_cdf(double z);

// Inverse of std_normal_cdf on (0, 1). Rational initial guess polished by
// one Halley step; good to ~1e-14 over the full open interval.
double std_normal_quantile(double p);

// Adaptive Gauss-Kronrod (7,15) quadrature of f over [lower, upper]. An
// infinite upper limit is handled by the monotone substitution
// x = lower + u/(1-u), u in (0,1). Nodes never touch the interval
// endpoints, so integrable endpoint singularities are admissible.
//
// Stops when the accumulated error estimate drops under
// max(tol.abs_tol, tol.rel_tol * |integral|); throws ConvergenceError
// after tol.max_iter subdivisions. Caveat for the infinite range: mass
// beyond x - lower ~ 9e15 sits past the resolution of the mapped
// endpoint, so integrands with pure power-law tails bottom out near 1e-8
// absolute. Tails with exponential or ~x^-2 decay are unaffected.
double integrate(const std::function<double(double)>& f, double lower,
                 double upper, const Tolerance& tol = {});

// Root of f in [lo, hi]; requires f(lo) * f(hi) <= 0. Bisection with
// secant / inverse-quadratic acceleration (Brent), converging to a bracket
// of width <= tol.abs_tol. Throws BracketError without a sign change and
// ConvergenceError past tol.max_iter iterations.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol = {});

}  // namespace bfdx
