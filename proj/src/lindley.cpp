#include "bfdx/lindley.hpp"

#include <cmath>

namespace bfdx {

Interval lindley_mean_range(std::int64_t n, const Threshold& q, BfKind kind,
                            const BfParams& params, const Tolerance& tol) {
  const double nd = static_cast<double>(n);
  const double lower = std::sqrt(2.0 * std::log(q.q) / nd);
  double upper;
  if (kind == BfKind::RobertVague) {
    upper = robert_required_mean(q, n);
  } else {
    upper = bf_threshold_t(kind, q, n, params, tol) / std::sqrt(nd);
  }
  if (lower > upper) {
    return Interval::empty();
  }
  return Interval(lower, upper);
}

Interval lindley_bf_range(std::int64_t n, const Threshold& q, BfKind kind,
                          const BfParams& params, const Tolerance& tol) {
  const Interval means = lindley_mean_range(n, q, kind, params, tol);
  if (means.is_empty()) {
    throw InfeasibleError("lindley_bf_range: the Lindley mean range is empty");
  }
  const double upper =
      vague_bf01(kind, GaussianSummary(n, means.lo()), params, tol);
  return Interval(q.q, upper);
}

double lindley_probability(std::int64_t n, const Threshold& q, BfKind kind,
                           const BfParams& params, const Tolerance& tol) {
  Interval means = Interval::empty();
  try {
    means = lindley_mean_range(n, q, kind, params, tol);
  } catch (const InfeasibleError&) {
    return 0.0;  // the vague BF never reaches q, so no Lindley case exists
  }
  if (means.is_empty()) {
    return 0.0;
  }
  const double root_n = std::sqrt(static_cast<double>(n));
  // Two-sided: the mirror-image interval below 0 contributes equally.
  return 2.0 * (std_normal_cdf(means.hi() * root_n) -
                std_normal_cdf(means.lo() * root_n));
}

double lindley_asymptote(double q) {
  if (!(q >= 1.0)) {
    throw DomainError("lindley_asymptote: requires q >= 1");
  }
  return std::erfc(std::sqrt(std::log(q)));
}

double lindley_asymptote(const Threshold& q) { return lindley_asymptote(q.q); }

LindleyReport detect_lindley_case(const GaussianSummary& s, const Threshold& q,
                                  BfKind kind, const BfParams& params,
                                  const Tolerance& tol) {
  const double bf = vague_bf01(kind, s, params, tol);
  const Interval counter = mu_bounds(q, s);
  const bool flagged = bf >= q.q && !counter.is_empty();
  return LindleyReport{kind, bf, counter, flagged, q};
}

}  // namespace bfdx
