#include "bfdx/bayes_factors.hpp"

#include <cmath>
#include <limits>

namespace bfdx {

namespace {
constexpr double kLn2Pi = 1.83787706640934548356;
constexpr double kLnHalf = -0.69314718055994530942;

// Tolerate roundoff when the radicand of an inversion sits exactly on its
// feasibility boundary (e.g. q = sqrt(n+1)).
double clamp_radicand(double rad, const char* what) {
  if (rad < 0.0) {
    if (rad > -1e-12) {
      return 0.0;
    }
    throw InfeasibleError(what);
  }
  return rad;
}
}  // namespace

BinomialData::BinomialData(std::int64_t n, std::int64_t k)
    : n_trials(n), k_successes(k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("BinomialData: requires 0 <= k <= n");
  }
}

GaussianSummary::GaussianSummary(std::int64_t n_in, double mean_in)
    : n(n_in), mean(mean_in) {
  if (n < 1 || !std::isfinite(mean)) {
    throw DomainError("GaussianSummary: requires n >= 1 and a finite mean");
  }
}

Threshold::Threshold(double q_in) : q(q_in) {
  if (!std::isfinite(q) || !(q > 1.0)) {
    throw DomainError("Threshold: requires q > 1");
  }
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi), empty_(false) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw DomainError("Interval: requires lo <= hi");
  }
}

double Interval::lo() const {
  if (empty_) throw DomainError("Interval: empty interval has no endpoints");
  return lo_;
}

double Interval::hi() const {
  if (empty_) throw DomainError("Interval: empty interval has no endpoints");
  return hi_;
}

bool Interval::contains(double x, double slack) const {
  return !empty_ && x >= lo_ - slack && x <= hi_ + slack;
}

bool Interval::contains(const Interval& inner, double slack) const {
  if (inner.empty_) return true;
  return !empty_ && inner.lo_ >= lo_ - slack && inner.hi_ <= hi_ + slack;
}

double binom_h0_likelihood(const BinomialData& d) {
  return std::exp(ln_choose(d.n_trials, d.k_successes) +
                  static_cast<double>(d.n_trials) * kLnHalf);
}

double binom_h1_marginal(const BinomialData& d) {
  return 1.0 / (static_cast<double>(d.n_trials) + 1.0);
}

double binom_bf01(const BinomialData& d) {
  return std::exp(std::log(static_cast<double>(d.n_trials) + 1.0) +
                  ln_choose(d.n_trials, d.k_successes) +
                  static_cast<double>(d.n_trials) * kLnHalf);
}

double binom_point_bf(double theta, const BinomialData& d, double theta0) {
  if (!(theta > 0.0) || !(theta < 1.0) || !(theta0 > 0.0) || !(theta0 < 1.0)) {
    throw DomainError("binom_point_bf: requires theta, theta0 in (0, 1)");
  }
  const double k = static_cast<double>(d.k_successes);
  const double nk = static_cast<double>(d.n_trials - d.k_successes);
  return std::exp(k * (std::log(theta) - std::log(theta0)) +
                  nk * (std::log1p(-theta) - std::log1p(-theta0)));
}

double robert_bf(const GaussianSummary& s) {
  const double n = static_cast<double>(s.n);
  return std::sqrt(n + 1.0) *
         std::exp(-(n * n * s.mean * s.mean) / (2.0 * n + 2.0));
}

double robert_required_mean(const Threshold& q, std::int64_t n) {
  if (n < 1) throw DomainError("robert_required_mean: requires n >= 1");
  const double nd = static_cast<double>(n);
  const double rad = clamp_radicand(
      std::log(nd + 1.0) - 2.0 * std::log(q.q),
      "robert_required_mean: no mean reaches q (n + 1 < q^2)");
  return std::sqrt((nd + 1.0) * rad) / nd;
}

double point_bf(double mu1, double mu2, const GaussianSummary& s) {
  const double n = static_cast<double>(s.n);
  const double d1 = s.mean - mu1;
  const double d2 = s.mean - mu2;
  return std::exp(n * (d1 * d1 - d2 * d2) / 2.0);
}

Interval mu_bounds(const Threshold& q, const GaussianSummary& s) {
  const double n = static_cast<double>(s.n);
  const double rad = n * s.mean * s.mean - 2.0 * std::log(q.q);
  if (rad <= 0.0) {
    return Interval::empty();
  }
  const double w = std::sqrt(rad / n);
  return Interval(s.mean - w, s.mean + w);
}

double mu_bounds_half_width(double n, double mean, double q) {
  const double rad = n * mean * mean - 2.0 * std::log(q);
  if (!(n > 0.0) || !(rad > 0.0)) {
    throw DomainError("mu_bounds_half_width: requires n > 0 and n mean^2 > 2 log q");
  }
  return std::sqrt(rad) / std::sqrt(n);
}

double mu_bounds_half_width_growth(double n, double mean, double q) {
  const double rad = n * mean * mean - 2.0 * std::log(q);
  if (!(n > 0.0) || !(rad > 0.0)) {
    throw DomainError("mu_bounds_half_width_growth: requires n > 0 and n mean^2 > 2 log q");
  }
  return std::log(q) / (std::pow(n, 1.5) * std::sqrt(rad));
}

double robert_bf_upper(std::int64_t n, const Threshold& q) {
  if (n < 1) throw DomainError("robert_bf_upper: requires n >= 1");
  const double min_mean = std::sqrt(2.0 * std::log(q.q) / static_cast<double>(n));
  return robert_bf(GaussianSummary(n, min_mean));
}

double jzs_bf01(double t, std::int64_t n, double cauchy_scale,
                const Tolerance& tol) {
  if (n < 2) throw DomainError("jzs_bf01: requires n >= 2");
  if (!(cauchy_scale > 0.0)) throw DomainError("jzs_bf01: requires cauchy_scale > 0");
  const double nu = static_cast<double>(n) - 1.0;
  const double neff = static_cast<double>(n) * cauchy_scale * cauchy_scale;
  const double log_null = -0.5 * (nu + 1.0) * std::log1p(t * t / nu);
  // Marginal-likelihood ratio with the t-density factored in, so the
  // integrand stays O(1) even at large nu. pi(g) is the inverse-chi^2(1)
  // density; g is the relative prior variance of the effect size.
  auto integrand = [&](double g) {
    const double shrink = 1.0 + neff * g;
    const double log_alt = -0.5 * (nu + 1.0) * std::log1p(t * t / (shrink * nu));
    return std::exp(log_alt - log_null - 0.5 * std::log(shrink) - 0.5 * kLn2Pi -
                    1.5 * std::log(g) - 0.5 / g);
  };
  const double ratio =
      integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), tol);
  return 1.0 / ratio;
}

double si_bf01(double t, std::int64_t n, double sigma2_delta) {
  if (n < 2) throw DomainError("si_bf01: requires n >= 2");
  if (!(sigma2_delta > 0.0)) throw DomainError("si_bf01: requires sigma2_delta > 0");
  const double nu = static_cast<double>(n) - 1.0;
  const double shrink = 1.0 + static_cast<double>(n) * sigma2_delta;
  const double log_num = -0.5 * (nu + 1.0) * std::log1p(t * t / nu);
  const double log_den = -0.5 * std::log(shrink) -
                         0.5 * (nu + 1.0) * std::log1p(t * t / (shrink * nu));
  return std::exp(log_num - log_den);
}

namespace {
double bf01_at_t(BfKind kind, double t, std::int64_t n, const BfParams& params,
                 const Tolerance& tol) {
  switch (kind) {
    case BfKind::RobertVague:
      return robert_bf(GaussianSummary(n, t / std::sqrt(static_cast<double>(n))));
    case BfKind::JZS:
      return jzs_bf01(t, n, params.jzs_scale, tol);
    case BfKind::ScaledInformation:
      return si_bf01(t, n, params.si_sigma2);
  }
  throw DomainError("unknown BfKind");
}
}  // namespace

double vague_bf01(BfKind kind, const GaussianSummary& s, const BfParams& params,
                  const Tolerance& tol) {
  if (kind == BfKind::RobertVague) {
    return robert_bf(s);
  }
  const double t = s.mean * std::sqrt(static_cast<double>(s.n));
  return bf01_at_t(kind, t, s.n, params, tol);
}

double bf_threshold_t(BfKind kind, const Threshold& q, std::int64_t n,
                      const BfParams& params, const Tolerance& tol) {
  constexpr double t_max = 10.0;
  const double bf_at_zero = bf01_at_t(kind, 0.0, n, params, tol);
  if (bf_at_zero < q.q) {
    throw InfeasibleError("bf_threshold_t: B01(0) < q, no crossing exists");
  }
  // B01 is strictly decreasing in t on the bracket.
  return find_root(
      [&](double t) { return bf01_at_t(kind, t, n, params, tol) - q.q; }, 0.0,
      t_max, tol);
}

double posterior_odds(double bf01, double prior_odds) {
  if (!(bf01 > 0.0) || !(prior_odds > 0.0)) {
    throw DomainError("posterior_odds: requires bf01 > 0 and prior_odds > 0");
  }
  return bf01 * prior_odds;
}

}  // namespace bfdx
