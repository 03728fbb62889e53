#include "bfdx/figures.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace bfdx {

namespace {
constexpr int kRowsPerCurve = 1001;
constexpr double kMuLo = -0.02;
constexpr double kMuHi = 0.10;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}
}  // namespace

std::int64_t emit_figure_data(int figure, const FigureScenario& scenario,
                              std::ostream& out) {
  if (figure != 1 && figure != 2) {
    throw DomainError("emit_figure_data: figure must be 1 or 2");
  }
  const Threshold q(scenario.q);
  const double mean = robert_required_mean(q, scenario.n);
  const double log_q = std::log(scenario.q);

  std::int64_t rows = 0;
  auto emit_curve = [&](std::int64_t n, bool with_n) {
    const GaussianSummary s(n, mean);
    for (int i = 0; i < kRowsPerCurve; ++i) {
      const double mu =
          kMuLo + (kMuHi - kMuLo) * static_cast<double>(i) / (kRowsPerCurve - 1);
      const double log_bf = std::log(point_bf(0.0, mu, s));
      out << num(mu) << ',' << num(log_bf);
      if (with_n) {
        out << ',' << n;
      }
      out << ',' << num(log_q) << ',' << num(-log_q) << '\n';
      ++rows;
    }
  };

  if (figure == 1) {
    out << "mu,log_bf,log_q,log_inv_q\n";
    emit_curve(scenario.n, false);
  } else {
    out << "mu,log_bf,n,log_q,log_inv_q\n";
    emit_curve(scenario.n, true);
    emit_curve(scenario.n2, true);
  }
  if (!out) {
    throw Error("emit_figure_data: write failed");
  }
  return rows;
}

}  // namespace bfdx
