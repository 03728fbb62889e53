#include "bfdx/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace bfdx {

Tolerance::Tolerance(double abs_tol_in, double rel_tol_in, int max_iter_in)
    : abs_tol(abs_tol_in), rel_tol(rel_tol_in), max_iter(max_iter_in) {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
    throw DomainError("Tolerance: requires abs_tol > 0, rel_tol > 0, max_iter >= 1");
  }
}

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("ln_gamma: requires x > 0");
  }
  return std::lgamma(x);
}

double ln_choose(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("ln_choose: requires 0 <= k <= n");
  }
  // Evaluate with the smaller of k, n-k first so that C(n,k) and C(n,n-k)
  // are bit-identical.
  const std::int64_t small = std::min(k, n - k);
  const std::int64_t large = n - small;
  return ln_gamma(static_cast<double>(n) + 1.0) -
         ln_gamma(static_cast<double>(small) + 1.0) -
         ln_gamma(static_cast<double>(large) + 1.0);
}

double std_normal_cdf(double z) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return 0.5 * std::erfc(-z * inv_sqrt2);
}

double std_normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw DomainError("std_normal_quantile: requires 0 < p < 1");
  }
  // Acklam's rational approximation, then one Halley refinement.
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // Halley step against the erfc-based CDF.
  constexpr double sqrt_2pi = 2.50662827463100050242;
  const double e = std_normal_cdf(x) - p;
  const double u = e * sqrt_2pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule. The Gauss nodes
// are the odd-indexed entries plus the midpoint.
constexpr double kXgk[7] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245};
constexpr double kWgk[7] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649};
constexpr double kWgkCenter = 0.209482141084727828012999174891714;
constexpr double kWg[3] = {0.129484966168869693270611432679082,
                           0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975};
constexpr double kWgCenter = 0.417959183673469387755102040816327;

struct GkEstimate {
  double integral;
  double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = kWgkCenter * fc;
  double resg = kWgCenter * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(center - dx) + f(center + dx);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) {
      resg += kWg[i / 2] * fsum;
    }
  }
  const double integral = resk * half;
  if (!std::isfinite(integral)) {
    throw DomainError("integrate: integrand produced a non-finite value");
  }
  return {integral, std::abs((resk - resg) * half)};
}

struct Segment {
  double error;
  double a;
  double b;
  double integral;
  bool operator<(const Segment& other) const { return error < other.error; }
};

double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, const Tolerance& tol) {
  GkEstimate whole = gk15(f, a, b);
  double total = whole.integral;
  double total_error = whole.error;
  std::priority_queue<Segment> segments;
  segments.push({whole.error, a, b, whole.integral});

  int splits = 0;
  while (total_error > std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) {
    if (splits >= tol.max_iter) {
      throw ConvergenceError("integrate: error estimate not met after max_iter subdivisions");
    }
    const Segment worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a) || !(mid < worst.b)) {
      throw ConvergenceError("integrate: interval cannot be subdivided further");
    }
    const GkEstimate left = gk15(f, worst.a, mid);
    const GkEstimate right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_error += left.error + right.error - worst.error;
    segments.push({left.error, worst.a, mid, left.integral});
    segments.push({right.error, mid, worst.b, right.integral});
    ++splits;
  }
  return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lower,
                 double upper, const Tolerance& tol) {
  if (std::isnan(lower) || std::isnan(upper) || std::isinf(lower)) {
    throw DomainError("integrate: bounds must be finite (upper may be +inf)");
  }
  if (lower > upper) {
    throw DomainError("integrate: requires lower <= upper");
  }
  if (lower == upper) {
    return 0.0;
  }
  if (std::isinf(upper)) {
    // x = lower + u/(1-u). Rounding can place a node exactly on u = 1; the
    // integrand is required to decay there, so that contribution is 0.
    auto transformed = [&f, lower](double u) {
      if (u >= 1.0) {
        return 0.0;
      }
      const double om = 1.0 - u;
      const double fx = f(lower + u / om);
      if (fx == 0.0) {
        return 0.0;
      }
      return fx / (om * om);
    };
    return integrate_finite(transformed, 0.0, 1.0, tol);
  }
  return integrate_finite(f, lower, upper, tol);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol) {
  if (!(lo <= hi) || std::isnan(lo) || std::isnan(hi)) {
    throw DomainError("find_root: requires lo <= hi");
  }
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketError("find_root: f(lo) and f(hi) have the same sign");
  }

  // Brent's method: keep [b, c] bracketing the root with b the best iterate.
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol.abs_tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Secant, or inverse quadratic when all three points are distinct.
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      }
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1) {
      b += d;
    } else {
      b += (xm > 0.0 ? tol1 : -tol1);
    }
    fb = f(b);
  }
  throw ConvergenceError("find_root: no convergence within max_iter iterations");
}

}  // namespace bfdx
