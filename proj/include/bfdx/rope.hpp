#pragma once

#include "bfdx/evidence_ratios.hpp"

namespace bfdx {

// Pre-registered region of practical equivalence around a point null; the
// null value sits strictly inside.
struct Rope {
  Rope(const Interval& interval, double null_value);
  Interval interval;
  double null_value;
};

enum class RopeDecision { AcceptNull, RejectNull, Indeterminate };

struct RopeVerdict {
  RopeDecision decision;
  RegionSet regions;
};

// Closed-interval containment slack absorbing root-finding error at
// region endpoints.
inline constexpr double kContainmentSlack = 1e-12;

// AcceptNull when a support interval contains the null value and lies
// inside the ROPE; RejectNull when a rejection interval contains the whole
// ROPE; Indeterminate otherwise (including partial overlap, which is
// reported rather than resolved).
RopeVerdict decide(const RegionSet& regions, const Rope& rope);

// Average evidence ratio over the ROPE,
// (1/|rope|) int exp(gaussian_log_er(s, mu)) dmu. Reported alongside the
// verdict as an additional diagnostic; it never changes the decision.
double mean_er_in_rope(const GaussianSummary& s, const Rope& rope,
                       const Tolerance& tol = {});

}  // namespace bfdx
