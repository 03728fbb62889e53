#include "bfdx/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>

#include <CLI11.hpp>

#include "bfdx/evidence_ratios.hpp"
#include "bfdx/figures.hpp"
#include "bfdx/lindley.hpp"
#include "bfdx/rope.hpp"
#include "bfdx/simulation.hpp"

namespace bfdx {

namespace {

// All numeric output carries 10 significant digits, plain decimal.
std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

// One flat, ordered record per invocation: echoed inputs plus results.
// json emits a single object; csv a header row and one data row; human
// prints the results only (bare when there is exactly one).
class Record {
 public:
  explicit Record(std::string command) : command_(std::move(command)) {}

  void input(const std::string& key, double v) { add(key, format_number(v), !std::isfinite(v), false); }
  void input(const std::string& key, std::int64_t v) { add(key, std::to_string(v), false, false); }
  void input(const std::string& key, std::uint64_t v) { add(key, std::to_string(v), false, false); }
  void input(const std::string& key, const std::string& v) { add(key, v, true, false); }

  void result(const std::string& key, double v) { add(key, format_number(v), !std::isfinite(v), true); }
  void result(const std::string& key, std::int64_t v) { add(key, std::to_string(v), false, true); }
  void result(const std::string& key, std::uint64_t v) { add(key, std::to_string(v), false, true); }
  void result(const std::string& key, const std::string& v) { add(key, v, true, true); }
  void result(const std::string& key, bool v) { add(key, v ? "true" : "false", false, true); }

  void result(const std::string& key, const Interval& iv) {
    result(key + "_empty", iv.is_empty());
    if (!iv.is_empty()) {
      result(key + "_lo", iv.lo());
      result(key + "_hi", iv.hi());
    }
  }

  void render(OutputFormat format, std::ostream& out) const {
    switch (format) {
      case OutputFormat::human: {
        std::size_t results = 0;
        for (const auto& f : fields_) results += f.is_result ? 1 : 0;
        for (const auto& f : fields_) {
          if (!f.is_result) continue;
          if (results == 1) {
            out << f.value << '\n';
          } else {
            out << f.key << " = " << f.value << '\n';
          }
        }
        break;
      }
      case OutputFormat::json: {
        out << "{\"command\":\"" << json_escape(command_) << '"';
        for (const auto& f : fields_) {
          out << ",\"" << json_escape(f.key) << "\":";
          if (f.quoted) {
            out << '"' << json_escape(f.value) << '"';
          } else {
            out << f.value;
          }
        }
        out << "}\n";
        break;
      }
      case OutputFormat::csv: {
        out << "command";
        for (const auto& f : fields_) out << ',' << f.key;
        out << '\n' << command_;
        for (const auto& f : fields_) out << ',' << f.value;
        out << '\n';
        break;
      }
    }
  }

 private:
  struct Field {
    std::string key;
    std::string value;
    bool quoted;
    bool is_result;
  };

  void add(const std::string& key, std::string value, bool quoted, bool is_result) {
    fields_.push_back({key, std::move(value), quoted, is_result});
  }

  std::string command_;
  std::vector<Field> fields_;
};

BfKind parse_kind(const std::string& name) {
  if (name == "robert") return BfKind::RobertVague;
  if (name == "jzs") return BfKind::JZS;
  return BfKind::ScaledInformation;
}

std::string verdict_name(RopeDecision d) {
  switch (d) {
    case RopeDecision::AcceptNull: return "accept_null";
    case RopeDecision::RejectNull: return "reject_null";
    case RopeDecision::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

struct Options {
  std::string format = "human";
  std::int64_t n = 0;
  std::int64_t n2 = 10000;
  std::int64_t k = 0;
  double q = 3.0;
  double mean = 0.0;
  double t = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double prior_odds = 1.0;
  double jzs_scale = kMediumEffectScale;
  double si_var = kMediumEffectVariance;
  double null_value = 0.0;
  std::vector<double> rope;
  std::string kind = "robert";
  std::uint64_t reps = 1000000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bayes factors, evidence ratios, support regions, and"
               " Lindley-case diagnostics for point-null hypotheses"};
  app.name("bfdx");
  app.require_subcommand(1);

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  // The handler for whichever leaf subcommand parses. Handlers return the
  // exit code; empty results report as data with exit 1.
  std::function<int()> handler;
  const auto fmt = [&o] {
    if (o.format == "json") return OutputFormat::json;
    if (o.format == "csv") return OutputFormat::csv;
    return OutputFormat::human;
  };

  const auto add_kind = [&o](CLI::App* cmd) {
    cmd->add_option("--kind", o.kind, "Vague-alternative BF kind")
        ->check(CLI::IsMember({"robert", "jzs", "si"}));
    cmd->add_option("--jzs-scale", o.jzs_scale,
                    "Cauchy prior scale for --kind jzs (default sqrt(2)/2)");
    cmd->add_option("--si-var", o.si_var,
                    "Normal prior variance for --kind si (default 0.5)");
  };
  const auto params = [&o] { return BfParams{o.jzs_scale, o.si_var}; };

  // --- bf ----------------------------------------------------------------
  CLI::App* bf = app.add_subcommand("bf", "Bayes factors");
  bf->require_subcommand(1);

  CLI::App* bf_robert = bf->add_subcommand("robert", "Robert vague-alternative B01");
  bf_robert->add_option("--n", o.n, "Sample size")->required();
  bf_robert->add_option("--mean", o.mean, "Sample mean (units of sigma)")->required();
  CLI::Option* robert_odds = bf_robert->add_option("--prior-odds", o.prior_odds, "Prior odds for H0");
  bf_robert->callback([&, robert_odds] {
    handler = [&, robert_odds] {
      Record r("bf robert");
      r.input("n", o.n);
      r.input("mean", o.mean);
      const double bf01 = robert_bf(GaussianSummary(o.n, o.mean));
      r.result("bf01", bf01);
      if (robert_odds->count() > 0) {
        r.result("posterior_odds", posterior_odds(bf01, o.prior_odds));
      }
      r.render(fmt(), out);
      return 0;
    };
  });

  const auto add_t_or_mean = [&o](CLI::App* cmd) {
    CLI::Option* mean_opt = cmd->add_option("--mean", o.mean, "Sample mean (units of sigma)");
    CLI::Option* t_opt = cmd->add_option("--t", o.t, "t statistic (mean * sqrt(n))");
    mean_opt->excludes(t_opt);
    return std::make_pair(mean_opt, t_opt);
  };

  CLI::App* bf_jzs = bf->add_subcommand("jzs", "JZS (Cauchy-prior) B01");
  bf_jzs->add_option("--n", o.n, "Sample size")->required();
  auto jzs_mt = add_t_or_mean(bf_jzs);
  bf_jzs->add_option("--scale", o.jzs_scale, "Cauchy prior scale (default sqrt(2)/2)");
  bf_jzs->callback([&, jzs_mt] {
    handler = [&, jzs_mt] {
      if (jzs_mt.first->count() == 0 && jzs_mt.second->count() == 0) {
        throw CLI::RequiredError("--mean or --t");
      }
      const double root_n = std::sqrt(static_cast<double>(o.n));
      const double t = jzs_mt.second->count() > 0 ? o.t : o.mean * root_n;
      Record r("bf jzs");
      r.input("n", o.n);
      r.input("mean", t / root_n);
      r.input("t", t);
      r.input("scale", o.jzs_scale);
      r.result("bf01", jzs_bf01(t, o.n, o.jzs_scale));
      r.render(fmt(), out);
      return 0;
    };
  });

  CLI::App* bf_si = bf->add_subcommand("si", "Scaled-information (normal-prior) B01");
  bf_si->add_option("--n", o.n, "Sample size")->required();
  auto si_mt = add_t_or_mean(bf_si);
  bf_si->add_option("--si-var", o.si_var, "Normal prior variance (default 0.5)");
  bf_si->callback([&, si_mt] {
    handler = [&, si_mt] {
      if (si_mt.first->count() == 0 && si_mt.second->count() == 0) {
        throw CLI::RequiredError("--mean or --t");
      }
      const double root_n = std::sqrt(static_cast<double>(o.n));
      const double t = si_mt.second->count() > 0 ? o.t : o.mean * root_n;
      Record r("bf si");
      r.input("n", o.n);
      r.input("mean", t / root_n);
      r.input("t", t);
      r.input("si_var", o.si_var);
      r.result("bf01", si_bf01(t, o.n, o.si_var));
      r.render(fmt(), out);
      return 0;
    };
  });

  CLI::App* bf_binom = bf->add_subcommand("binom", "Binomial B01 for theta = 1/2");
  bf_binom->add_option("--n", o.n, "Trial count")->required();
  bf_binom->add_option("--k", o.k, "Success count")->required();
  CLI::Option* binom_odds = bf_binom->add_option("--prior-odds", o.prior_odds, "Prior odds for H0");
  bf_binom->callback([&, binom_odds] {
    handler = [&, binom_odds] {
      Record r("bf binom");
      r.input("n", o.n);
      r.input("k", o.k);
      const BinomialData d(o.n, o.k);
      r.result("h0_likelihood", binom_h0_likelihood(d));
      r.result("h1_marginal", binom_h1_marginal(d));
      const double bf01 = binom_bf01(d);
      r.result("bf01", bf01);
      if (binom_odds->count() > 0) {
        r.result("posterior_odds", posterior_odds(bf01, o.prior_odds));
      }
      r.render(fmt(), out);
      return 0;
    };
  });

  CLI::App* bf_point = bf->add_subcommand("point", "Point-vs-point Gaussian BF (favors --mu2)");
  bf_point->add_option("--n", o.n, "Sample size")->required();
  bf_point->add_option("--mean", o.mean, "Sample mean")->required();
  bf_point->add_option("--mu2", o.mu2, "Alternative mean")->required();
  bf_point->add_option("--mu1", o.mu1, "Null mean (default 0)");
  bf_point->callback([&] {
    handler = [&] {
      Record r("bf point");
      r.input("n", o.n);
      r.input("mean", o.mean);
      r.input("mu1", o.mu1);
      r.input("mu2", o.mu2);
      r.result("bf", point_bf(o.mu1, o.mu2, GaussianSummary(o.n, o.mean)));
      r.render(fmt(), out);
      return 0;
    };
  });

  // --- region ------------------------------------------------------------
  CLI::App* region = app.add_subcommand("region", "Support regions and mu bounds");
  region->require_subcommand(1);

  CLI::App* mu_b = region->add_subcommand("mu-bounds", "mu with point BF vs the null >= q");
  mu_b->add_option("--n", o.n, "Sample size")->required();
  mu_b->add_option("--mean", o.mean, "Sample mean")->required();
  mu_b->add_option("--q", o.q, "BF threshold");
  mu_b->callback([&] {
    handler = [&] {
      Record r("region mu-bounds");
      r.input("n", o.n);
      r.input("mean", o.mean);
      r.input("q", o.q);
      const Interval iv = mu_bounds(Threshold(o.q), GaussianSummary(o.n, o.mean));
      r.result("empty", iv.is_empty());
      if (!iv.is_empty()) {
        r.result("lo", iv.lo());
        r.result("hi", iv.hi());
      }
      r.render(fmt(), out);
      return iv.is_empty() ? 1 : 0;
    };
  });

  CLI::App* sup_g = region->add_subcommand("support-gauss", "Gaussian evidence-ratio support region");
  sup_g->add_option("--n", o.n, "Sample size")->required();
  sup_g->add_option("--mean", o.mean, "Sample mean")->required();
  sup_g->add_option("--q", o.q, "ER threshold");
  sup_g->callback([&] {
    handler = [&] {
      Record r("region support-gauss");
      r.input("n", o.n);
      r.input("mean", o.mean);
      r.input("q", o.q);
      const Interval iv =
          gaussian_support_region(GaussianSummary(o.n, o.mean), Threshold(o.q));
      r.result("empty", iv.is_empty());
      if (!iv.is_empty()) {
        r.result("lo", iv.lo());
        r.result("hi", iv.hi());
      }
      r.render(fmt(), out);
      return iv.is_empty() ? 1 : 0;
    };
  });

  CLI::App* sup_b = region->add_subcommand("support-binom", "Binomial evidence-ratio support region");
  sup_b->add_option("--n", o.n, "Trial count")->required();
  sup_b->add_option("--k", o.k, "Success count")->required();
  sup_b->add_option("--q", o.q, "ER threshold");
  sup_b->callback([&] {
    handler = [&] {
      Record r("region support-binom");
      r.input("n", o.n);
      r.input("k", o.k);
      r.input("q", o.q);
      const Interval iv =
          binom_support_region(BinomialData(o.n, o.k), Threshold(o.q));
      r.result("empty", iv.is_empty());
      if (!iv.is_empty()) {
        r.result("lo", iv.lo());
        r.result("hi", iv.hi());
      }
      r.render(fmt(), out);
      return iv.is_empty() ? 1 : 0;
    };
  });

  // --- lindley -----------------------------------------------------------
  CLI::App* lindley = app.add_subcommand("lindley", "Lindley-case diagnostics");
  lindley->require_subcommand(1);

  CLI::App* l_range = lindley->add_subcommand("range", "Mean and BF ranges guaranteeing a Lindley case");
  l_range->add_option("--n", o.n, "Sample size")->required();
  l_range->add_option("--q", o.q, "BF threshold");
  add_kind(l_range);
  l_range->callback([&] {
    handler = [&] {
      Record r("lindley range");
      r.input("n", o.n);
      r.input("q", o.q);
      r.input("kind", o.kind);
      const Interval means =
          lindley_mean_range(o.n, Threshold(o.q), parse_kind(o.kind), params());
      r.result("empty", means.is_empty());
      if (!means.is_empty()) {
        const Interval bfs =
            lindley_bf_range(o.n, Threshold(o.q), parse_kind(o.kind), params());
        r.result("mean_lo", means.lo());
        r.result("mean_hi", means.hi());
        r.result("bf_lo", bfs.lo());
        r.result("bf_hi", bfs.hi());
      }
      r.render(fmt(), out);
      return means.is_empty() ? 1 : 0;
    };
  });

  CLI::App* l_prob = lindley->add_subcommand("prob", "Probability of a Lindley case under the null");
  l_prob->add_option("--n", o.n, "Sample size")->required();
  l_prob->add_option("--q", o.q, "BF threshold");
  add_kind(l_prob);
  l_prob->callback([&] {
    handler = [&] {
      Record r("lindley prob");
      r.input("n", o.n);
      r.input("q", o.q);
      r.input("kind", o.kind);
      r.result("probability",
               lindley_probability(o.n, Threshold(o.q), parse_kind(o.kind), params()));
      r.render(fmt(), out);
      return 0;
    };
  });

  CLI::App* l_asym = lindley->add_subcommand("asymptote", "Large-n limit of the Lindley-case probability");
  l_asym->add_option("--q", o.q, "BF threshold");
  l_asym->callback([&] {
    handler = [&] {
      Record r("lindley asymptote");
      r.input("q", o.q);
      r.result("asymptote", lindley_asymptote(o.q));
      r.render(fmt(), out);
      return 0;
    };
  });

  CLI::App* l_detect = lindley->add_subcommand("detect", "Diagnose one (n, mean, q) configuration");
  l_detect->add_option("--n", o.n, "Sample size")->required();
  l_detect->add_option("--mean", o.mean, "Sample mean")->required();
  l_detect->add_option("--q", o.q, "BF threshold");
  add_kind(l_detect);
  l_detect->callback([&] {
    handler = [&] {
      Record r("lindley detect");
      r.input("n", o.n);
      r.input("mean", o.mean);
      r.input("q", o.q);
      r.input("kind", o.kind);
      const LindleyReport report = detect_lindley_case(
          GaussianSummary(o.n, o.mean), Threshold(o.q), parse_kind(o.kind), params());
      r.result("conventional_bf", report.conventional_bf);
      r.result("counter", report.counter_interval);
      r.result("is_lindley_case", report.is_lindley_case);
      r.render(fmt(), out);
      return 0;
    };
  });

  // --- rope --------------------------------------------------------------
  CLI::App* rope = app.add_subcommand("rope", "Region-of-practical-equivalence decisions");
  rope->require_subcommand(1);

  CLI::App* rope_decide = rope->add_subcommand("decide", "Compare ER regions against a ROPE");
  rope_decide->add_option("--rope", o.rope, "ROPE as LO,HI (use --rope=LO,HI)")
      ->delimiter(',')
      ->expected(2)
      ->required();
  rope_decide->add_option("--n", o.n, "Sample size / trial count")->required();
  CLI::Option* rope_mean = rope_decide->add_option("--mean", o.mean, "Sample mean (Gaussian data)");
  CLI::Option* rope_k = rope_decide->add_option("--k", o.k, "Success count (binomial data)");
  rope_mean->excludes(rope_k);
  CLI::Option* rope_null =
      rope_decide->add_option("--null", o.null_value, "Null value (default 0; 0.5 for binomial)");
  rope_decide->add_option("--q", o.q, "ER threshold");
  rope_decide->callback([&, rope_mean, rope_k, rope_null] {
    handler = [&, rope_mean, rope_k, rope_null] {
      if (rope_mean->count() == 0 && rope_k->count() == 0) {
        throw CLI::RequiredError("--mean or --k");
      }
      const bool binomial = rope_k->count() > 0;
      const double null_value =
          rope_null->count() > 0 ? o.null_value : (binomial ? 0.5 : 0.0);
      const Rope the_rope(Interval(o.rope[0], o.rope[1]), null_value);
      Record r("rope decide");
      r.input("n", o.n);
      if (binomial) {
        r.input("k", o.k);
      } else {
        r.input("mean", o.mean);
      }
      r.input("q", o.q);
      r.input("rope_lo", o.rope[0]);
      r.input("rope_hi", o.rope[1]);
      r.input("null", null_value);
      const RegionSet regions =
          binomial ? binom_regions(BinomialData(o.n, o.k), Threshold(o.q))
                   : gaussian_regions(GaussianSummary(o.n, o.mean), Threshold(o.q));
      const RopeVerdict verdict = decide(regions, the_rope);
      r.result("verdict", verdict_name(verdict.decision));
      if (regions.support.empty()) {
        r.result("support_empty", true);
      } else {
        r.result("support_lo", regions.support.front().lo());
        r.result("support_hi", regions.support.front().hi());
      }
      std::int64_t index = 0;
      for (const Interval& tail : regions.rejection) {
        const std::string key = "rejection" + std::to_string(++index);
        r.result(key + "_lo", tail.lo());
        r.result(key + "_hi", tail.hi());
      }
      if (!binomial) {
        r.result("mean_er_in_rope",
                 mean_er_in_rope(GaussianSummary(o.n, o.mean), the_rope));
      }
      r.render(fmt(), out);
      return 0;
    };
  });

  // --- sim ---------------------------------------------------------------
  CLI::App* sim = app.add_subcommand("sim", "Monte Carlo validation");
  sim->require_subcommand(1);

  CLI::App* sim_lindley = sim->add_subcommand("lindley", "Simulate the Lindley-case rate under the null");
  sim_lindley->add_option("--n", o.n, "Sample size")->required();
  sim_lindley->add_option("--q", o.q, "BF threshold");
  sim_lindley->add_option("--reps", o.reps, "Replications");
  sim_lindley->add_option("--seed", o.seed, "RNG seed");
  sim_lindley->add_option("--workers", o.workers, "Worker threads (0 = hardware)");
  add_kind(sim_lindley);
  sim_lindley->callback([&] {
    handler = [&] {
      Record r("sim lindley");
      r.input("n", o.n);
      r.input("q", o.q);
      r.input("kind", o.kind);
      r.input("reps", o.reps);
      r.input("seed", o.seed);
      const SimulationResult res = simulate_lindley_rate(
          o.n, Threshold(o.q), parse_kind(o.kind), o.reps, o.seed, params(), o.workers);
      r.result("hits", res.hits);
      r.result("rate", res.rate);
      r.result("stderr", res.std_error);
      r.result("analytic",
               lindley_probability(o.n, Threshold(o.q), parse_kind(o.kind), params()));
      r.render(fmt(), out);
      return 0;
    };
  });

  // --- fig ---------------------------------------------------------------
  CLI::App* fig = app.add_subcommand("fig", "Emit plot data as CSV");
  fig->require_subcommand(1);

  CLI::App* fig1 = fig->add_subcommand("1", "log point BF vs mu at the q-attaining mean");
  fig1->add_option("--q", o.q, "BF threshold");
  fig1->add_option("--n", o.n, "Sample size (default 5000)");
  fig1->callback([&] {
    handler = [&] {
      FigureScenario scenario;
      scenario.q = o.q;
      if (o.n > 0) scenario.n = o.n;
      emit_figure_data(1, scenario, out);
      return 0;
    };
  });

  CLI::App* fig2 = fig->add_subcommand("2", "Same curve at two sample sizes, shared mean");
  fig2->add_option("--q", o.q, "BF threshold");
  fig2->add_option("--n", o.n, "Base sample size (default 5000)");
  fig2->add_option("--n2", o.n2, "Second sample size (default 10000)");
  fig2->callback([&] {
    handler = [&] {
      FigureScenario scenario;
      scenario.q = o.q;
      if (o.n > 0) scenario.n = o.n;
      scenario.n2 = o.n2;
      emit_figure_data(2, scenario, out);
      return 0;
    };
  });

  // --- quandary ----------------------------------------------------------
  CLI::App* quandary = app.add_subcommand(
      "quandary", "Rejected mu pair straddling a supported null");
  quandary->add_option("--n", o.n, "Sample size")->required();
  quandary->add_option("--q", o.q, "ER threshold");
  quandary->callback([&] {
    handler = [&] {
      Record r("quandary");
      r.input("n", o.n);
      r.input("q", o.q);
      r.result("required_mean", gaussian_required_mean(Threshold(o.q), o.n));
      const auto pair = quandary_pair(o.n, Threshold(o.q));
      r.result("mu_lo", pair.first);
      r.result("mu_hi", pair.second);
      r.render(fmt(), out);
      return 0;
    };
  });

  for (CLI::App* cmd : {bf, region, lindley, rope, sim, fig, quandary}) {
    cmd->fallthrough();
    for (CLI::App* leaf : cmd->get_subcommands([](const CLI::App*) { return true; })) {
      leaf->fallthrough();
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (!handler) {
    err << "bfdx: no subcommand selected\n";
    return 2;
  }
  try {
    return handler();
  } catch (const CLI::ParseError& e) {
    err << "bfdx: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    Record r("error");
    r.result("feasible", false);
    r.result("reason", std::string(e.what()));
    r.render(fmt(), out);
    return 1;
  } catch (const Error& e) {
    err << "bfdx: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bfdx
