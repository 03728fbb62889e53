#include "bfdx/evidence_ratios.hpp"

#include <cmath>
#include <limits>

namespace bfdx {

namespace {
double clamp_radicand(double rad, const char* what) {
  if (rad < 0.0) {
    if (rad > -1e-12) {
      return 0.0;
    }
    throw InfeasibleError(what);
  }
  return rad;
}

double binom_log_er(double theta, const BinomialData& d) {
  const double k = static_cast<double>(d.k_successes);
  const double nk = static_cast<double>(d.n_trials - d.k_successes);
  return std::log(static_cast<double>(d.n_trials) + 1.0) +
         ln_choose(d.n_trials, d.k_successes) + k * std::log(theta) +
         nk * std::log1p(-theta);
}

// Supremum of the log evidence ratio over theta; attained at k/n (at the
// boundary of (0,1) when k is 0 or n, where it equals log(n+1)).
double binom_log_er_peak(const BinomialData& d) {
  if (d.k_successes == 0 || d.k_successes == d.n_trials) {
    return std::log(static_cast<double>(d.n_trials) + 1.0);
  }
  const double mode =
      static_cast<double>(d.k_successes) / static_cast<double>(d.n_trials);
  return binom_log_er(mode, d);
}
}  // namespace

double gaussian_log_er(const GaussianSummary& s, double mu) {
  const double n = static_cast<double>(s.n);
  const double diff = s.mean - mu;
  return (s.mean * s.mean - n * diff * diff + std::log(n)) / 2.0;
}

double gaussian_log_er_exact(const GaussianSummary& s, double mu) {
  const double n = static_cast<double>(s.n);
  const double diff = s.mean - mu;
  return (std::log(n + 1.0) - n * diff * diff + n * s.mean * s.mean / (n + 1.0)) /
         2.0;
}

double gaussian_required_mean(const Threshold& q, std::int64_t n) {
  if (n < 2) {
    throw InfeasibleError("gaussian_required_mean: requires log n > 2 log q");
  }
  const double nd = static_cast<double>(n);
  const double rad =
      clamp_radicand(std::log(nd) - 2.0 * std::log(q.q),
                     "gaussian_required_mean: no mean reaches q (log n < 2 log q)");
  return std::sqrt(rad / (nd - 1.0));
}

Interval gaussian_support_region(const GaussianSummary& s, const Threshold& q) {
  const double n = static_cast<double>(s.n);
  const double rad = s.mean * s.mean + std::log(n) - 2.0 * std::log(q.q);
  if (rad <= 0.0) {
    return Interval::empty();
  }
  const double w = std::sqrt(rad / n);
  return Interval(s.mean - w, s.mean + w);
}

std::pair<double, double> quandary_pair(std::int64_t n, const Threshold& q) {
  const double center = gaussian_required_mean(q, n);
  const double nd = static_cast<double>(n);
  const double half =
      std::sqrt((2.0 * std::log(q.q) * (nd - 2.0) + nd * std::log(nd)) /
                (nd * (nd - 1.0)));
  return {center - half, center + half};
}

double binom_er(double theta, const BinomialData& d) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw DomainError("binom_er: requires theta in (0, 1)");
  }
  return std::exp(binom_log_er(theta, d));
}

Interval binom_support_region(const BinomialData& d, const Threshold& q,
                              const Tolerance& tol) {
  const double log_q = std::log(q.q);
  if (binom_log_er_peak(d) < log_q) {
    return Interval::empty();
  }
  constexpr double edge = 1e-9;
  const double mode =
      static_cast<double>(d.k_successes) / static_cast<double>(d.n_trials);
  auto excess = [&](double theta) { return binom_log_er(theta, d) - log_q; };
  // ER is unimodal in theta with mode k/n; one root on each side where the
  // evidence ratio actually dips under q before the boundary.
  double lo = 0.0;
  if (d.k_successes > 0) {
    lo = find_root(excess, edge, mode, tol);
  }
  double hi = 1.0;
  if (d.k_successes < d.n_trials) {
    hi = find_root(excess, std::max(mode, edge), 1.0 - edge, tol);
  }
  return Interval(lo, hi);
}

double er_from_point_bf(double point_bf_value, double er_at_null) {
  if (!(point_bf_value > 0.0) || !(er_at_null > 0.0)) {
    throw DomainError("er_from_point_bf: requires positive inputs");
  }
  return point_bf_value * er_at_null;
}

RegionSet gaussian_regions(const GaussianSummary& s, const Threshold& q) {
  RegionSet regions{{}, {}, q};
  const Interval support = gaussian_support_region(s, q);
  if (!support.is_empty()) {
    regions.support.push_back(support);
  }
  // gaussian_log_er <= -log q outside mean +- w; the radicand is always
  // positive, so the two rejection tails always exist.
  const double n = static_cast<double>(s.n);
  const double w =
      std::sqrt((s.mean * s.mean + std::log(n) + 2.0 * std::log(q.q)) / n);
  constexpr double inf = std::numeric_limits<double>::infinity();
  regions.rejection.push_back(Interval(-inf, s.mean - w));
  regions.rejection.push_back(Interval(s.mean + w, inf));
  return regions;
}

RegionSet binom_regions(const BinomialData& d, const Threshold& q,
                        const Tolerance& tol) {
  RegionSet regions{{}, {}, q};
  const Interval support = binom_support_region(d, q, tol);
  if (!support.is_empty()) {
    regions.support.push_back(support);
  }
  const double log_inv_q = -std::log(q.q);
  constexpr double edge = 1e-9;
  const double mode =
      static_cast<double>(d.k_successes) / static_cast<double>(d.n_trials);
  auto excess = [&](double theta) { return binom_log_er(theta, d) - log_inv_q; };
  // The peak evidence ratio is always >= 1 > 1/q, so a rejection tail
  // exists on each side where the ratio vanishes at the boundary (k > 0
  // on the left, k < n on the right).
  if (d.k_successes > 0) {
    regions.rejection.push_back(Interval(0.0, find_root(excess, edge, mode, tol)));
  }
  if (d.k_successes < d.n_trials) {
    regions.rejection.push_back(
        Interval(find_root(excess, std::max(mode, edge), 1.0 - edge, tol), 1.0));
  }
  return regions;
}

}  // namespace bfdx
