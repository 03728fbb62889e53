#include "bfdx/rope.hpp"

#include <cmath>

namespace bfdx {

Rope::Rope(const Interval& interval_in, double null_value_in)
    : interval(interval_in), null_value(null_value_in) {
  if (interval.is_empty() || !(interval.lo() < null_value) ||
      !(null_value < interval.hi())) {
    throw DomainError("Rope: null value must lie strictly inside the interval");
  }
}

RopeVerdict decide(const RegionSet& regions, const Rope& rope) {
  for (const Interval& support : regions.support) {
    if (support.contains(rope.null_value, kContainmentSlack) &&
        rope.interval.contains(support, kContainmentSlack)) {
      return {RopeDecision::AcceptNull, regions};
    }
  }
  for (const Interval& rejection : regions.rejection) {
    if (rejection.contains(rope.interval, kContainmentSlack)) {
      return {RopeDecision::RejectNull, regions};
    }
  }
  return {RopeDecision::Indeterminate, regions};
}

double mean_er_in_rope(const GaussianSummary& s, const Rope& rope,
                       const Tolerance& tol) {
  const double lo = rope.interval.lo();
  const double hi = rope.interval.hi();
  const double total = integrate(
      [&](double mu) { return std::exp(gaussian_log_er(s, mu)); }, lo, hi, tol);
  return total / (hi - lo);
}

}  // namespace bfdx
