#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fvqsd/chain_io.hpp"
#include "fvqsd/cli.hpp"
#include "fvqsd/error.hpp"
#include "fvqsd/estimators.hpp"
#include "fvqsd/graphical.hpp"
#include "fvqsd/rng.hpp"
#include "fvqsd/semigroup.hpp"

namespace fvqsd::cli {
namespace {

using nlohmann::json;

struct Outcome {
  std::vector<ResultRow> rows;
  json results = json::object();
  json checks = json::array();
  Plot plot;
};

struct Context {
  const AbsorbingChain& chain;
  Params& params;
  std::uint64_t seed;
  Execution exec;
  std::ostream& log;
};

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t tag) { return ReplicaSeed{seed, 0}.child(tag).master_seed; }

void add_check(Outcome& out, const std::string& name, double value, double limit, bool passed) {
  out.checks.push_back({{"name", name}, {"value", value}, {"limit", limit}, {"passed", passed}});
}

std::string profile_label(const AbsorbingChain& chain, const ProbabilityVector& p, std::size_t index) {
  for (std::size_t x = 0; x < chain.size(); ++x) {
    if (p == ProbabilityVector::delta(chain.size(), x)) return "delta:" + chain.states()[x];
  }
  if (p == ProbabilityVector::uniform(chain.size())) return "uniform";
  return "profile" + std::to_string(index);
}

std::vector<double> as_vector(const ProbabilityVector& p) { return {p.weights().begin(), p.weights().end()}; }

bool strictly_decreasing(const ConvergenceCurve& curve) {
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    if (!(curve.points[k].estimate < curve.points[k - 1].estimate)) return false;
  }
  return true;
}

Outcome run_qsd(Context& ctx) {
  const double tol = ctx.params.number("tol", 1e-12);
  const std::size_t max_iter = ctx.params.count("max_iter", 1'000'000);
  ctx.params.finish();

  const QsdSolution sol = qsd(ctx.chain, tol, max_iter);
  if (!sol.converged) {
    throw Error(ErrorCode::MaxIterationsExceeded,
                "power iteration did not converge in " + std::to_string(max_iter) + " iterations");
  }
  const UniquenessCondition cond = check_uniqueness_condition(ctx.chain);
  Outcome out;
  for (std::size_t x = 0; x < ctx.chain.size(); ++x) {
    out.rows.push_back({"qsd", {}, {}, ctx.chain.states()[x], "", sol.nu[x], {}, {}, {}, ctx.seed});
  }
  out.rows.push_back({"qsd_alpha", {}, {}, "", "", sol.alpha, {}, {}, {}, ctx.seed});
  out.results = {{"nu", as_vector(sol.nu)},
                 {"alpha", sol.alpha},
                 {"residual", sol.residual},
                 {"iterations", sol.iterations},
                 {"converged", sol.converged},
                 {"C", ctx.chain.max_absorption()},
                 {"q_bar", ctx.chain.max_jump_rate()},
                 {"uniqueness_condition", {{"holds", cond.holds}, {"left", cond.left}, {"right", cond.right}}}};
  PlotSeries s{"nu", {}, {}};
  for (std::size_t x = 0; x < ctx.chain.size(); ++x) {
    s.x.push_back(static_cast<double>(x));
    s.y.push_back(sol.nu[x]);
  }
  out.plot = {"Quasi-stationary distribution", "site index", "nu(x)", false, false, {s}};
  return out;
}

Outcome run_semigroup(Context& ctx) {
  const ProbabilityVector mu = ctx.params.profile("mu", ProbabilityVector::delta(ctx.chain.size(), 0));
  const auto t_grid = ctx.params.numbers("t_grid", {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0});
  const double tol = ctx.params.number("tol", kDefaultTransientTol);
  const double step = ctx.params.number("ode_step", std::min(0.01, max_ode_step(ctx.chain)));
  ctx.params.finish();

  const QsdSolution sol = qsd(ctx.chain);
  Outcome out;
  json laws = json::array();
  PlotSeries dist{"||T_t mu - nu||", {}, {}};
  PlotSeries gap{"||T_t mu - ODE||", {}, {}};
  for (double t : t_grid) {
    const ProbabilityVector law = conditioned_law(ctx.chain, mu, t, tol);
    const ProbabilityVector ode = forward_ode(ctx.chain, mu, t, step);
    const double d = tv_distance(law, sol.nu);
    const double g = tv_distance(law, ode);
    out.rows.push_back({"semigroup_distance", {}, t, "", "", d, {}, {}, {}, ctx.seed});
    out.rows.push_back({"semigroup_ode_gap", {}, t, "", "", g, {}, {}, {}, ctx.seed});
    laws.push_back({{"t", t}, {"conditioned_law", as_vector(law)}, {"forward_ode", as_vector(ode)}});
    dist.x.push_back(t);
    dist.y.push_back(d);
    gap.x.push_back(t);
    gap.y.push_back(g);
  }
  out.results = {{"nu", as_vector(sol.nu)}, {"alpha", sol.alpha}, {"laws", laws}};
  try {
    const DecayFit fit = decay_rate_estimate(ctx.chain, mu, sol.nu, t_grid);
    out.results["decay_fit"] = {{"theta", fit.theta},
                                {"slope", fit.slope},
                                {"intercept", fit.intercept},
                                {"r_squared", fit.r_squared}};
  } catch (const Error& e) {
    out.results["decay_fit"] = {{"error", e.what()}};
  }
  out.plot = {"Conditioned law: distance to the QSD", "t", "total variation", false, true, {dist, gap}};
  return out;
}

Outcome run_simulate(Context& ctx) {
  const std::size_t particles = ctx.params.count("N", 100);
  const ProbabilityVector profile = ctx.params.profile("profile", ProbabilityVector::uniform(ctx.chain.size()));
  const auto times = ctx.params.numbers("t_grid", {0.0, 0.5, 1.0, 2.0});
  const std::size_t replicas = ctx.params.count("replicas", 1000);
  ctx.params.finish();

  const ParticleConfiguration xi0 = expand_profile(ctx.chain, profile, particles);
  const auto means = occupation_means(ctx.chain, xi0, times, replicas, ctx.seed, ctx.exec);
  const ProbabilityVector m0 = empirical_measure(xi0);

  Outcome out;
  json conditioned = json::array();
  std::vector<PlotSeries> series;
  for (std::size_t x = 0; x < ctx.chain.size(); ++x) {
    series.push_back({"E m(" + ctx.chain.states()[x] + ")", {}, {}});
    series.push_back({"T_t m0(" + ctx.chain.states()[x] + ")", {}, {}});
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    const ProbabilityVector law = conditioned_law(ctx.chain, m0, times[k]);
    conditioned.push_back({{"t", times[k]}, {"law", as_vector(law)}});
    for (std::size_t x = 0; x < ctx.chain.size(); ++x) {
      out.rows.push_back({"simulate", particles, times[k], ctx.chain.states()[x], "", means[k][x].mean,
                          means[k][x].se, {}, replicas, ctx.seed});
      series[2 * x].x.push_back(times[k]);
      series[2 * x].y.push_back(means[k][x].mean);
      series[2 * x + 1].x.push_back(times[k]);
      series[2 * x + 1].y.push_back(law[x]);
    }
  }
  out.results = {{"initial_measure", as_vector(m0)}, {"conditioned_law", conditioned}};
  out.plot = {"Mean empirical measure", "t", "occupation", false, false, series};
  return out;
}

Outcome run_correlation(Context& ctx) {
  const std::size_t n = ctx.chain.size();
  std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) all_pairs.emplace_back(x, y);
  }
  const auto counts = ctx.params.counts("N_list", {11, 101});
  const auto times = ctx.params.numbers("t_list", {0.25, 0.5, 1.0});
  const ProbabilityVector profile = ctx.params.profile("profile", ProbabilityVector::uniform(n));
  const auto pairs = ctx.params.site_pairs("pairs", all_pairs);
  const std::size_t replicas = ctx.params.count("replicas", 10000);
  const auto override_bound = ctx.params.optional_number("bound_override");
  ctx.params.finish();

  Outcome out;
  json estimates = json::array();
  std::map<std::string, PlotSeries> series;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    const ParticleConfiguration xi0 = expand_profile(ctx.chain, profile, counts[a]);
    for (std::size_t b = 0; b < times.size(); ++b) {
      const std::uint64_t seed = derived_seed(ctx.seed, a * 4096 + b);
      ctx.log << "correlation N=" << counts[a] << " t=" << format_number(times[b]) << '\n';
      for (const CorrelationEstimate& e :
           correlation_experiment(ctx.chain, xi0, times[b], pairs, replicas, seed, ctx.exec)) {
        const double bound = override_bound.value_or(e.bound);
        const std::string& sx = ctx.chain.states()[e.x];
        const std::string& sy = ctx.chain.states()[e.y];
        out.rows.push_back({"correlation", e.particles, e.t, sx, sy, e.covariance, e.se, bound, replicas, seed});
        const bool ok = std::abs(e.covariance) <= bound + 3.0 * e.se;
        add_check(out, "correlation N=" + std::to_string(e.particles) + " t=" + format_number(e.t) + " (" + sx +
                           "," + sy + ")",
                  std::abs(e.covariance), bound + 3.0 * e.se, ok);
        estimates.push_back({{"N", e.particles}, {"t", e.t}, {"x", sx}, {"y", sy}, {"covariance", e.covariance},
                             {"se", e.se}, {"bound", bound}});
        auto& s = series["|cov| t=" + format_number(e.t) + " (" + sx + "," + sy + ")"];
        s.x.push_back(static_cast<double>(e.particles));
        s.y.push_back(std::abs(e.covariance));
        auto& sb = series["bound t=" + format_number(e.t) + (e.x == e.y ? " diag" : " off")];
        if (sb.x.empty() || sb.x.back() != static_cast<double>(e.particles)) {
          sb.x.push_back(static_cast<double>(e.particles));
          sb.y.push_back(bound);
        }
      }
    }
  }
  out.results = {{"C", ctx.chain.max_absorption()}, {"estimates", estimates}};
  out.plot = {"Two-site covariance of the empirical measure", "N", "|covariance|", true, true, {}};
  for (auto& [name, s] : series) {
    s.name = name;
    out.plot.series.push_back(std::move(s));
  }
  return out;
}

json curve_json(const ConvergenceCurve& curve) {
  json points = json::array();
  for (const CurvePoint& p : curve.points) {
    json entry = {{"N", p.particles}, {"estimate", p.estimate}, {"se", p.se}};
    if (!p.profile_estimates.empty()) {
      entry["worst_profile"] = p.worst_profile;
      entry["profile_estimates"] = p.profile_estimates;
    }
    if (!p.mean_measure.empty()) {
      json mean = json::array();
      json se = json::array();
      for (const MeanEstimate& m : p.mean_measure) {
        mean.push_back(m.mean);
        se.push_back(m.se);
      }
      entry["mean_measure"] = mean;
      entry["mean_measure_se"] = se;
    }
    points.push_back(std::move(entry));
  }
  return points;
}

PlotSeries curve_series(const std::string& name, const ConvergenceCurve& curve) {
  PlotSeries s{name, {}, {}};
  for (const CurvePoint& p : curve.points) {
    s.x.push_back(static_cast<double>(p.particles));
    s.y.push_back(p.estimate);
  }
  return s;
}

Outcome run_convergence(Context& ctx) {
  const auto counts = ctx.params.counts("N_list", {10, 40, 160});
  const double t = ctx.params.number("t", 1.0);
  const auto profiles = ctx.params.profiles("profiles", extreme_profiles(ctx.chain));
  const std::size_t replicas = ctx.params.count("replicas", 10000);
  ctx.params.finish();

  ctx.log << "convergence over " << counts.size() << " particle counts\n";
  const ConvergenceCurve curve = convergence_experiment(ctx.chain, profiles, t, counts, replicas, ctx.seed, ctx.exec);
  Outcome out;
  for (const CurvePoint& p : curve.points) {
    out.rows.push_back({"convergence", p.particles, t, profile_label(ctx.chain, profiles[p.worst_profile], p.worst_profile),
                        "", p.estimate, p.se, {}, replicas, ctx.seed});
    for (std::size_t b = 0; b < profiles.size(); ++b) {
      out.rows.push_back({"convergence_profile", p.particles, t, profile_label(ctx.chain, profiles[b], b), "",
                          p.profile_estimates[b], {}, {}, replicas, ctx.seed});
    }
  }
  out.results = {{"curve", curve_json(curve)}, {"strictly_decreasing", strictly_decreasing(curve)}};
  out.plot = {"max over initial profiles of E||m(xi_t) - T_t m(xi_0)||", "N", "total variation", true, true,
              {curve_series("estimate", curve)}};
  return out;
}

StationaryParams stationary_params(Params& params) {
  StationaryParams sp;
  sp.burn_in = params.number("burn_in", 50.0);
  sp.n_samples = params.count("n_samples", 500);
  sp.spacing = params.number("spacing", 1.0);
  return sp;
}

Outcome run_qsd_profile(Context& ctx) {
  const auto counts = ctx.params.counts("N_list", {10, 40, 160});
  const StationaryParams sp = stationary_params(ctx.params);
  const std::size_t runs = ctx.params.count("runs", 4);
  ctx.params.finish();

  const QsdSolution sol = qsd(ctx.chain);
  ctx.log << "stationary profile over " << counts.size() << " particle counts\n";
  const ConvergenceCurve curve = qsd_profile_experiment(ctx.chain, sol.nu, counts, sp, runs, ctx.seed, ctx.exec);
  Outcome out;
  for (const CurvePoint& p : curve.points) {
    out.rows.push_back({"qsd_profile", p.particles, {}, "", "", p.estimate, p.se, {}, runs * sp.n_samples, ctx.seed});
    for (std::size_t x = 0; x < ctx.chain.size(); ++x) {
      out.rows.push_back({"qsd_profile_mean", p.particles, {}, ctx.chain.states()[x], "", p.mean_measure[x].mean,
                          p.mean_measure[x].se, {}, runs * sp.n_samples, ctx.seed});
    }
  }
  out.results = {{"nu", as_vector(sol.nu)},
                 {"curve", curve_json(curve)},
                 {"strictly_decreasing", strictly_decreasing(curve)}};
  out.plot = {"Stationary E||m - nu||", "N", "total variation", true, true, {curve_series("estimate", curve)}};
  return out;
}

Outcome run_overlap(Context& ctx) {
  const auto counts = ctx.params.counts("N_list", {101, 201});
  const auto times = ctx.params.numbers("t_list", {0.25, 0.5});
  const std::size_t replicas = ctx.params.count("replicas", 10000);
  const auto override_bound = ctx.params.optional_number("bound_override");
  ctx.params.finish();

  Outcome out;
  json estimates = json::array();
  std::map<std::string, PlotSeries> series;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    for (std::size_t b = 0; b < times.size(); ++b) {
      const std::uint64_t seed = derived_seed(ctx.seed, a * 4096 + b);
      ctx.log << "overlap N=" << counts[a] << " t=" << format_number(times[b]) << '\n';
      const OverlapEstimate e = overlap_probability(ctx.chain, counts[a], times[b], replicas, seed, ctx.exec);
      const double bound = override_bound.value_or(e.bound);
      out.rows.push_back({"overlap", e.particles, e.horizon, "1", "2", e.estimate, e.se, bound, replicas, seed});
      out.rows.push_back({"influence_size", e.particles, e.horizon, "1", "", e.mean_size, e.size_se, e.size_bound,
                          replicas, seed});
      const std::string where = " N=" + std::to_string(e.particles) + " t=" + format_number(e.horizon);
      add_check(out, "overlap" + where, e.estimate, bound + 3.0 * e.se, e.estimate <= bound + 3.0 * e.se);
      add_check(out, "influence_size" + where, e.mean_size, e.size_bound + 3.0 * e.size_se,
                e.mean_size <= e.size_bound + 3.0 * e.size_se);
      estimates.push_back({{"N", e.particles}, {"t", e.horizon}, {"estimate", e.estimate}, {"se", e.se},
                           {"ci", {e.ci_low, e.ci_high}}, {"bound", bound}, {"mean_size", e.mean_size},
                           {"size_se", e.size_se}, {"size_bound", e.size_bound}});
      auto& s = series["overlap t=" + format_number(e.horizon)];
      s.x.push_back(static_cast<double>(e.particles));
      s.y.push_back(e.estimate);
      auto& sb = series["bound t=" + format_number(e.horizon)];
      sb.x.push_back(static_cast<double>(e.particles));
      sb.y.push_back(bound);
    }
  }
  out.results = {{"C", ctx.chain.max_absorption()}, {"estimates", estimates}};
  out.plot = {"Influence-set overlap probability", "N", "P(overlap)", true, true, {}};
  for (auto& [name, s] : series) {
    s.name = name;
    out.plot.series.push_back(std::move(s));
  }
  return out;
}

Outcome run_product_moment(Context& ctx) {
  std::vector<std::size_t> all(ctx.chain.size());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
  const std::size_t particles = ctx.params.count("N", 160);
  const auto subset = ctx.params.sites("U", all);
  const StationaryParams sp = stationary_params(ctx.params);
  const std::size_t runs = ctx.params.count("runs", 4);
  const double slack = ctx.params.number("slack", 0.05);
  ctx.params.finish();

  const QsdSolution sol = qsd(ctx.chain);
  const ProductMomentEstimate e =
      product_moment_experiment(ctx.chain, sol.nu, subset, particles, sp, runs, ctx.seed, ctx.exec);
  std::string label;
  for (std::size_t x : subset) label += (label.empty() ? "" : "+") + ctx.chain.states()[x];
  Outcome out;
  out.rows.push_back({"product_moment", particles, {}, label, "", e.estimate, e.se, e.target, runs * sp.n_samples,
                      ctx.seed});
  const double gap = std::abs(e.estimate - e.target);
  add_check(out, "product_moment U=" + label, gap, 3.0 * e.se + slack, gap <= 3.0 * e.se + slack);
  out.results = {{"nu", as_vector(sol.nu)}, {"estimate", e.estimate}, {"se", e.se}, {"target", e.target}};
  out.plot = {"Stationary product moment", "N", "E prod m_x", false, false,
              {{"estimate", {static_cast<double>(particles)}, {e.estimate}},
               {"prod nu(x)", {static_cast<double>(particles)}, {e.target}}}};
  return out;
}

const std::map<std::string, std::function<Outcome(Context&)>>& handlers() {
  static const std::map<std::string, std::function<Outcome(Context&)>> table = {
      {"qsd", run_qsd},
      {"semigroup", run_semigroup},
      {"simulate", run_simulate},
      {"correlation", run_correlation},
      {"convergence", run_convergence},
      {"qsd_profile", run_qsd_profile},
      {"overlap", run_overlap},
      {"product_moment", run_product_moment},
  };
  return table;
}

AbsorbingChain validated_chain(const json& doc) {
  const RawChain raw = raw_chain_from_json(doc);
  try {
    return validate(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::ChainValidationError, e.what());
  }
}

std::filesystem::path output_directory(const ExperimentConfig& config, const RunOptions& options) {
  if (options.out) return *options.out;
  if (config.output_dir) return *config.output_dir;
  if (const char* env = std::getenv("FVQSD_OUT"); env && *env) return std::filesystem::path(env) / config.kind;
  return std::filesystem::path("fvqsd_out") / config.kind;
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  writer(out);
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace

int run(const std::filesystem::path& config_path, const RunOptions& options, std::ostream& log, std::ostream& err) {
  try {
    const ExperimentConfig config = load_config(config_path);
    if (options.expected_kind && *options.expected_kind != config.kind) {
      throw Error(ErrorCode::ConfigParseError,
                  "kind: config describes '" + config.kind + "' but subcommand is '" + *options.expected_kind + "'");
    }
    const AbsorbingChain chain = validated_chain(config.chain);
    const std::uint64_t seed = options.seed.value_or(config.seed);
    Params params(config.params, chain);
    Context ctx{chain, params, seed, Execution{options.threads, false}, log};

    const Outcome outcome = handlers().at(config.kind)(ctx);

    bool passed = true;
    for (const auto& c : outcome.checks) passed = passed && c.at("passed").get<bool>();

    const json summary = {
        {"config", {{"kind", config.kind}, {"chain", chain_to_json(chain)}, {"params", params.resolved()}, {"seed", seed}}},
        {"results", outcome.results},
        {"checks", outcome.checks},
        {"passed", passed},
    };

    const std::filesystem::path dir = output_directory(config, options);
    std::filesystem::create_directories(dir);
    write_file(dir / "results.csv", [&](std::ostream& o) { write_csv(o, outcome.rows); });
    write_file(dir / "summary.json", [&](std::ostream& o) { o << summary.dump(2) << '\n'; });
    write_file(dir / "plot.svg", [&](std::ostream& o) { write_svg(o, outcome.plot); });
    log << config.kind << ": wrote " << dir.string() << (passed ? "" : " (bound check FAILED)") << '\n';
    return passed ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int validate_command(const std::filesystem::path& chain_path, std::ostream& out, std::ostream& err) {
  try {
    const RawChain raw = read_chain_file(chain_path);
    AbsorbingChain chain;
    try {
      chain = validate(raw);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotIrreducibleOnLambda) out << "irreducible: no\n";
      throw;
    }
    const UniquenessCondition cond = check_uniqueness_condition(chain);
    out << "states: " << chain.size() << '\n'
        << "C: " << format_number(chain.max_absorption()) << '\n'
        << "q_bar: " << format_number(chain.max_jump_rate()) << '\n'
        << "irreducible: yes\n"
        << "uniqueness_condition: " << (cond.holds ? "holds" : "fails") << " (left " << format_number(cond.left)
        << ", right " << format_number(cond.right) << ")\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Fleming-Viot particle systems and quasi-stationary distributions"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int threads = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config,config", config_path, "Experiment config (JSON)")->required();
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "Override the config's master seed");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Run the experiment described by a config");
  add_common(run_cmd);
  std::vector<CLI::App*> kind_cmds;
  for (const std::string& kind : kExperimentKinds) {
    CLI::App* sub = app.add_subcommand(kind, "Run a '" + kind + "' experiment config");
    add_common(sub);
    kind_cmds.push_back(sub);
  }
  CLI::App* validate_cmd = app.add_subcommand("validate", "Validate a chain file and print derived constants");
  validate_cmd->add_option("--config,--chain,chain", config_path, "Chain file (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  if (validate_cmd->parsed()) return validate_command(config_path, std::cout, std::cerr);

  RunOptions options;
  options.threads = threads;
  if (!out_dir.empty()) options.out = out_dir;
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--seed") > 0) options.seed = seed;
    if (sub != run_cmd) options.expected_kind = sub->get_name();
  }
  return run(config_path, options, std::cout, std::cerr);
}

}  // namespace fvqsd::cli
