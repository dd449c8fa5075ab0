#include "qf/cli.hpp"

#include "qf/finsler.hpp"
#include "qf/paths.hpp"
#include "qf/quotient.hpp"
#include "qf/scenarios.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

namespace qf {

Operation parse_operation(const std::string& name) {
  if (name == "distance") return Operation::Distance;
  if (name == "finsler-norm") return Operation::FinslerNorm;
  if (name == "finsler-sweep") return Operation::FinslerSweep;
  if (name == "intrinsic") return Operation::Intrinsic;
  if (name == "length") return Operation::Length;
  if (name == "checks") return Operation::Checks;
  throw ConfigError("unknown operation '" + name + "'");
}

std::string to_string(Operation op) {
  switch (op) {
    case Operation::Distance: return "distance";
    case Operation::FinslerNorm: return "finsler-norm";
    case Operation::FinslerSweep: return "finsler-sweep";
    case Operation::Intrinsic: return "intrinsic";
    case Operation::Length: return "length";
    case Operation::Checks: return "checks";
  }
  return "?";
}

namespace {

constexpr double kMetricTol = 1e-10;
constexpr double kClosedFormTol = 1e-12;

Eigen::VectorXd to_eigen(const std::vector<double>& xs) {
  return Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::string join(const Eigen::VectorXd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ';';
    s += format_double(v[i]);
  }
  return s;
}

// Group coordinates when the length matches the parameter count, otherwise
// an algebra vector mapped through exp.
GroupElement element_from(const GroupModel& G, const std::vector<double>& xs, const char* flag) {
  if (xs.empty()) return identity(G);
  const Eigen::VectorXd v = to_eigen(xs);
  try {
    if (v.size() == G.param_dim) {
      GroupElement g = v;
      if (G.kind == GroupKind::TranslationTorus2) {
        for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = wrap_unit(g[i]);
      }
      validate(G, g);
      return g;
    }
    if (v.size() == G.algebra_dim) return exp_map(G, v);
  } catch (const InvalidElement& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
  std::ostringstream os;
  os << flag << " has " << v.size() << " entries; " << G.name() << " takes " << G.param_dim
     << " coordinates or " << G.algebra_dim << " algebra entries";
  throw ConfigError(os.str());
}

AlgebraVector direction_from(const GroupModel& G, const std::vector<double>& xs) {
  if (xs.empty()) {
    AlgebraVector e = AlgebraVector::Zero(G.algebra_dim);
    e[0] = 1.0;
    return e;
  }
  if (static_cast<int>(xs.size()) != G.algebra_dim || !to_eigen(xs).allFinite()) {
    std::ostringstream os;
    os << "--v needs " << G.algebra_dim << " finite entries for " << G.name();
    throw ConfigError(os.str());
  }
  return to_eigen(xs);
}

// Unit direction at angle theta in the scenario's sweep plane.
AlgebraVector sweep_direction(const GroupModel& G, double theta) {
  AlgebraVector v = AlgebraVector::Zero(G.algebra_dim);
  if (G.algebra_dim == 1) {
    v[0] = std::cos(theta);
  } else if (G.kind == GroupKind::Rotation3) {
    v[0] = std::cos(theta);
    v[2] = std::sin(theta);
  } else {
    v[0] = std::cos(theta);
    v[1] = std::sin(theta);
  }
  return v;
}

const std::vector<std::string> kEstimatorColumns{"direction",      "limit_value", "limit_err",
                                                 "sup_killing",    "sup_continuous", "closed_form",
                                                 "max_pairwise_gap", "tolerance",  "agree"};

std::vector<Cell> estimator_row(const Scenario& S, const AlgebraVector& v, bool& passed) {
  try {
    const auto c = compare_estimators(S, v);
    passed = passed && c.agree;
    return {join(v),
            c.limit.value,
            c.limit.error_estimate,
            c.sup_killing.value,
            c.sup_continuous.value,
            c.closed_form ? *c.closed_form : std::nan(""),
            c.max_pairwise_gap,
            c.tolerance,
            c.agree};
  } catch (const NonConvergent&) {
    passed = false;
    const double nan = std::nan("");
    return {join(v), nan, nan, nan, nan, S.closed_form ? S.closed_form(v) : nan, nan, nan, false};
  }
}

RunResult op_distance(const Scenario& S, const RunConfig& cfg) {
  RunResult r;
  r.table.columns = {"scenario", "from", "to", "d_X"};
  const GroupElement g1 = element_from(S.group, cfg.from, "--from");
  const GroupElement g2 = element_from(S.group, cfg.to, "--to");
  r.table.add_row({S.name, join(g1), join(g2), induced_metric(S, {g1}, {g2})});
  return r;
}

RunResult op_finsler_norm(const Scenario& S, const RunConfig& cfg) {
  RunResult r;
  r.table.columns = kEstimatorColumns;
  r.table.add_row(estimator_row(S, direction_from(S.group, cfg.v), r.passed));
  return r;
}

RunResult op_finsler_sweep(const Scenario& S, const RunConfig& cfg) {
  RunResult r;
  r.table.columns = kEstimatorColumns;
  const int n = cfg.steps.value_or(16);
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    r.table.add_row(estimator_row(S, sweep_direction(S.group, theta), r.passed));
  }
  return r;
}

RunResult op_intrinsic(const Scenario& S, const RunConfig& cfg) {
  RunResult r;
  r.table.columns = {"from", "to", "knots", "induced", "intrinsic", "polls", "converged"};
  const GroupElement g1 = element_from(S.group, cfg.from, "--from");
  const GroupElement g2 = element_from(S.group, cfg.to, "--to");
  const int knots = cfg.steps.value_or(4);
  IntrinsicOptions options;
  options.seed = cfg.seed;
  constexpr int kPollBudget = 200000;
  try {
    const auto res = intrinsic_distance(S, {g1}, {g2}, knots, kPollBudget, options);
    r.table.add_row({join(g1), join(g2), static_cast<double>(knots), res.induced, res.value,
                     static_cast<double>(res.polls), true});
  } catch (const IterationBudgetExceeded& e) {
    r.passed = false;
    r.table.add_row({join(g1), join(g2), static_cast<double>(knots), induced_metric(S, {g1}, {g2}), e.best,
                     static_cast<double>(kPollBudget), false});
  }
  return r;
}

RunResult op_length(const Scenario& S, const RunConfig& cfg) {
  RunResult r;
  r.table.columns = {"refinement", "segments", "partition_sum"};
  QuotientPath path;
  path.knots = {{element_from(S.group, cfg.from, "--from")}, {element_from(S.group, cfg.to, "--to")}};
  path.params = {0.0, 1.0};
  const int depth = cfg.steps.value_or(8);
  if (depth < 0) throw ConfigError("--steps must be nonnegative for length");
  const auto seq = path_length(S, path, depth);
  for (std::size_t k = 0; k < seq.sums.size(); ++k) {
    r.table.add_row({static_cast<double>(k), std::ldexp(1.0, static_cast<int>(k)), seq.sums[k]});
  }
  return r;
}

RunResult op_checks(const Scenario& S, const RunConfig& cfg) {
  RunResult r;
  r.table.columns = {"check", "value", "expected", "tolerance", "source", "pass"};
  auto add = [&](const std::string& name, double value, double expected, double tol, const std::string& source) {
    const bool ok = std::abs(value - expected) <= tol;
    r.passed = r.passed && ok;
    r.table.add_row({name, value, expected, tol, source, ok});
  };

  for (const auto& e : S.expected) {
    double value = std::nan("");
    try {
      value = e.evaluate(S);
    } catch (const NonConvergent&) {
    }
    add(e.label, value, e.expected, e.tolerance, to_string(e.tag));
  }

  std::mt19937_64 rng(cfg.seed);
  const int trials = cfg.steps.value_or(20);
  double sym = 0.0, tri = 0.0, inv = 0.0, self = 0.0;
  for (int k = 0; k < trials; ++k) {
    const QuotientPoint a{random_element(S.group, rng)};
    const QuotientPoint b{random_element(S.group, rng)};
    const QuotientPoint c{random_element(S.group, rng)};
    const QuotientPoint g{random_element(S.group, rng)};
    const double ab = induced_metric(S, a, b);
    sym = std::max(sym, std::abs(ab - induced_metric(S, b, a)));
    tri = std::max(tri, induced_metric(S, a, c) - ab - induced_metric(S, b, c));
    inv = std::max(inv, invariance_check(S, g, a, b));
    self = std::max(self, induced_metric(S, a, a));
  }
  add("metric symmetry residual", sym, 0.0, kMetricTol, "property");
  add("metric triangle violation", std::max(0.0, tri), 0.0, kMetricTol, "property");
  add("left invariance residual", inv, 0.0, kMetricTol, "property");
  add("d_X(g, g)", self, 0.0, 0.0, "property");

  constexpr int kDirections = 3;
  for (int k = 0; k < kDirections; ++k) {
    const AlgebraVector v = random_direction(S.group, rng);
    bool ok = true;
    const auto row = estimator_row(S, v, ok);
    const double gap = std::get<double>(row[6]);
    const double tol = std::get<double>(row[7]);
    r.passed = r.passed && ok;
    r.table.add_row({"estimator gap at " + join(v), gap, 0.0, tol, "property", ok});
  }

  if (S.closed_form) {
    const auto rep = norm_axiom_check(S, 200, NormSource::ClosedForm, cfg.seed);
    add("closed form F(0)", rep.zero_value, 0.0, kClosedFormTol, "property");
    add("closed form symmetry", rep.max_symmetry, 0.0, kClosedFormTol, "property");
    add("closed form homogeneity", rep.max_homogeneity, 0.0, kClosedFormTol, "property");
    add("closed form triangle violation", rep.max_triangle_violation, 0.0, kClosedFormTol, "property");
  }
  return r;
}

Scenario make_scenario(const RunConfig& cfg) {
  ScenarioParams p;
  p.grid_n = cfg.grid_n;
  p.a = cfg.a;
  p.b = cfg.b;
  p.cap_radius = cfg.cap_radius;
  p.slope = cfg.slope;
  p.dim = cfg.dim;
  Scenario S;
  try {
    S = build_scenario(cfg.scenario, p);
    if (cfg.ladder_t0) S.ladder.t0 = *cfg.ladder_t0;
    if (cfg.ladder_ratio) S.ladder.ratio = *cfg.ladder_ratio;
    if (cfg.ladder_depth) S.ladder.depth = *cfg.ladder_depth;
    S.ladder.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return S;
}

}  // namespace

RunResult execute(const RunConfig& cfg) {
  if (cfg.steps && *cfg.steps < 0) throw ConfigError("--steps must be nonnegative");
  const Scenario S = make_scenario(cfg);
  switch (cfg.op) {
    case Operation::Distance: return op_distance(S, cfg);
    case Operation::FinslerNorm: return op_finsler_norm(S, cfg);
    case Operation::FinslerSweep: return op_finsler_sweep(S, cfg);
    case Operation::Intrinsic: return op_intrinsic(S, cfg);
    case Operation::Length: return op_length(S, cfg);
    case Operation::Checks: return op_checks(S, cfg);
  }
  throw ConfigError("unhandled operation");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Induced Hausdorff metrics on coset spaces and their Finsler norms"};
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");

  RunConfig cfg;
  std::string command, op_name, format_name = "csv";
  std::optional<int> steps, ladder_depth;
  std::optional<double> ladder_t0, ladder_ratio;

  app.add_option("command", command, "the word 'run' (optional)")->check(CLI::IsMember({"run"}));
  app.add_option("scenario,--scenario", cfg.scenario, "scenario name")
      ->check(CLI::IsMember(scenario_names()));
  app.add_option("op,--op", op_name, "distance | finsler-norm | finsler-sweep | intrinsic | length | checks");
  app.add_option("--steps", steps, "sweep directions, knots, refinements or trials, by operation");
  app.add_option("--a", cfg.a, "half-plane sample abscissa");
  app.add_option("--b", cfg.b, "half-plane sample height");
  app.add_option("--grid-n", cfg.grid_n, "sample density (torus grid size, sphere ring count)");
  app.add_option("--cap-radius", cfg.cap_radius, "sphere cap radius");
  app.add_option("--slope", cfg.slope, "irrational flow slope (0 means sqrt 2)");
  app.add_option("--dim", cfg.dim, "dimension of the Euclidean scenario");
  app.add_option("--ladder-t0", ladder_t0, "first ladder step");
  app.add_option("--ladder-ratio", ladder_ratio, "ladder ratio in (0, 1)");
  app.add_option("--ladder-depth", ladder_depth, "number of ladder rungs");
  app.add_option("--from", cfg.from, "start element, comma separated")->delimiter(',');
  app.add_option("--to", cfg.to, "end element, comma separated")->delimiter(',');
  app.add_option("--v", cfg.v, "algebra direction, comma separated")->delimiter(',');
  app.add_option("--out", cfg.out, "output file (stdout when absent)");
  app.add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  RunResult result;
  try {
    if (cfg.scenario.empty()) throw ConfigError("no scenario given");
    if (op_name.empty()) throw ConfigError("no operation given");
    cfg.op = parse_operation(op_name);
    cfg.format = parse_format(format_name);
    cfg.steps = steps;
    cfg.ladder_t0 = ladder_t0;
    cfg.ladder_ratio = ladder_ratio;
    cfg.ladder_depth = ladder_depth;
    result = execute(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    emit_table(result.table, cfg.format, cfg.out);
  } catch (const TableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return result.passed ? kExitOk : kExitTolerance;
}

}  // namespace qf
