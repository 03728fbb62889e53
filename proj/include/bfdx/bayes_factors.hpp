#pragma once

#include <cstdint>

#include "bfdx/numerics.hpp"

namespace bfdx {

// n trials of a two-outcome process, k of them successes.
struct BinomialData {
  BinomialData(std::int64_t n, std::int64_t k);
  std::int64_t n_trials;
  std::int64_t k_successes;
};

// Sample size and sample mean from a normal population with known unit
// variance; the mean is in units of sigma.
struct GaussianSummary {
  GaussianSummary(std::int64_t n, double mean);
  std::int64_t n;
  double mean;
};

// Which vague-alternative Bayes factor is in force.
enum class BfKind { RobertVague, JZS, ScaledInformation };

// Criterial Bayes-factor threshold, q > 1 (conventional choices: 3, 10).
struct Threshold {
  explicit Threshold(double q);
  double q;
};

// Closed interval with an explicit empty state; endpoints may be infinite.
class Interval {
 public:
  Interval(double lo, double hi);
  static Interval empty() { return Interval(); }

  bool is_empty() const { return empty_; }
  double lo() const;
  double hi() const;
  double width() const { return hi() - lo(); }

  // Closed-endpoint membership / containment, widened by `slack` on both
  // sides. Empty intervals contain nothing and are contained in anything.
  bool contains(double x, double slack = 0.0) const;
  bool contains(const Interval& inner, double slack = 0.0) const;

 private:
  Interval() : lo_(0.0), hi_(0.0), empty_(true) {}
  double lo_;
  double hi_;
  bool empty_;
};

// Conventional "medium" effect-size prior scale, r = sqrt(2)/2. The
// reference analyses this library reproduces use it for both t-test BFs:
// Cauchy(0, r) for JZS, Normal(0, r^2) for the scaled-information prior.
inline constexpr double kMediumEffectScale = 0.70710678118654752440;
inline constexpr double kMediumEffectVariance = 0.5;

// Prior scales threaded through the kind-dispatched operations. Defaults
// reproduce the reference numbers; the raw jzs_bf01/si_bf01 below default
// to the Rouder et al. (2009) unit scales instead.
struct BfParams {
  double jzs_scale = kMediumEffectScale;
  double si_sigma2 = kMediumEffectVariance;
};

// --- binomial point null (theta0 = 1/2 unless stated) -----------------

// C(n,k) 0.5^n, evaluated in log space.
double binom_h0_likelihood(const BinomialData& d);

// Marginal likelihood under a uniform prior on theta: exactly 1/(n+1).
double binom_h1_marginal(const BinomialData& d);

// B01 for theta = 1/2 against the uniform-prior alternative:
// (n+1) C(n,k) 0.5^n.
double binom_bf01(const BinomialData& d);

// Likelihood ratio of a point alternative theta against theta0. Values
// above 1 favor theta. Requires theta, theta0 strictly inside (0,1).
double binom_point_bf(double theta, const BinomialData& d, double theta0 = 0.5);

// --- Gaussian point null mu = 0 ----------------------------------------

// Robert's Bayes factor for the null: sqrt(n+1) exp(-n^2 xbar^2 / (2n+2)).
double robert_bf(const GaussianSummary& s);

// Inverts robert_bf: the nonnegative mean with robert_bf(n, mean) = q,
// namely sqrt((n+1)(log(n+1) - 2 log q)) / n. Infeasible when n+1 < q^2.
double robert_required_mean(const Threshold& q, std::int64_t n);

// Point-vs-point Gaussian BF, exp(n((xbar-mu1)^2 - (xbar-mu2)^2)/2).
// Argument order is (null, alternative): values above 1 favor mu2.
double point_bf(double mu1, double mu2, const GaussianSummary& s);

// The mu with point_bf(0, mu, s) = q: xbar +- sqrt(n xbar^2 - 2 log q)/sqrt(n).
// Every mu strictly inside satisfies point_bf(0, mu, s) > q. Empty when
// n xbar^2 <= 2 log q.
Interval mu_bounds(const Threshold& q, const GaussianSummary& s);

// Half-width of mu_bounds as a function of continuous n, and its
// n-derivative log(q) / (n^(3/2) sqrt(n mean^2 - 2 log q)). The width grows
// with n whenever q > 1.
double mu_bounds_half_width(double n, double mean, double q);
double mu_bounds_half_width_growth(double n, double mean, double q);

// robert_bf at the smallest mean with a nonempty mu_bounds region,
// sqrt(2 log q / n); equivalently sqrt(n+1) q^(-n/(n+1)). Increasing in n
// for n > 2 log q - 1.
double robert_bf_upper(std::int64_t n, const Threshold& q);

// --- Rouder et al. (2009) one-sample t BFs, t = mean * sqrt(n) ----------

// JZS B01 with a Cauchy(0, cauchy_scale) prior on effect size:
//   (1 + t^2/nu)^(-(nu+1)/2) /
//   int_0^inf (1+Ng)^(-1/2) (1 + t^2/((1+Ng) nu))^(-(nu+1)/2) pi(g) dg,
// nu = n-1, N = n * scale^2, pi = inverse-chi^2(1). Quadrature failures
// propagate as ConvergenceError.
double jzs_bf01(double t, std::int64_t n, double cauchy_scale = 1.0,
                const Tolerance& tol = {});

// Scaled-information B01 with a Normal(0, sigma2_delta) prior on effect
// size; closed form with K = 1 + n sigma2_delta:
//   (1 + t^2/nu)^(-(nu+1)/2) / [K^(-1/2) (1 + t^2/(K nu))^(-(nu+1)/2)].
double si_bf01(double t, std::int64_t n, double sigma2_delta = 1.0);

// B01 of the given kind at the sample summary s.
double vague_bf01(BfKind kind, const GaussianSummary& s,
                  const BfParams& params = {}, const Tolerance& tol = {});

// The t >= 0 at which the kind's B01 equals q, found in the bracket
// [0, 10]. Infeasible when B01(0) < q (no crossing exists).
double bf_threshold_t(BfKind kind, const Threshold& q, std::int64_t n,
                      const BfParams& params = {}, const Tolerance& tol = {});

// bf01 * prior_odds.
double posterior_odds(double bf01, double prior_odds = 1.0);

}  // namespace bfdx
