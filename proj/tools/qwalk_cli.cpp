// qwalk: run coin and scattering quantum walks on ported graphs and audit
// their equivalence.
//
//   qwalk simulate       --graph G --model coin|scattering --unitary U --init I --steps N
//   qwalk equiv-check    --graph G --coin C [--gamma GAMMA] --report OUT
//   qwalk cross-prob     --graph G --model coin|scattering --unitary U --init I --steps N
//                        --native OUT --cross OUT
//   qwalk validate-graph --graph G
//
// Exit status: 0 success, 2 parse/config error, 3 numerical validation
// failure, 4 dimension error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/coin_walk.hpp"
#include "qwalk/config_io.hpp"
#include "qwalk/equivalence.hpp"
#include "qwalk/error.hpp"
#include "qwalk/measurement.hpp"
#include "qwalk/scattering_walk.hpp"

namespace {

using namespace qwalk;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDimension = 4;

struct CommonOptions {
  std::string graph;
  std::string mu;
  std::string phi;
};

struct RunOptions {
  CommonOptions common;
  std::string model = "coin";
  std::string unitary;
  std::string init;
  long steps = 0;
  std::string format = "csv";
  std::string out;
  std::string native_out;
  std::string cross_out;
};

struct AuditOptions {
  CommonOptions common;
  std::string coin;
  std::string gamma;
  std::string report;
  double tol = 1e-12;
  std::size_t dense_cap = kDefaultDenseCap;
  std::size_t trials = 200;
  std::uint64_t seed = EquivalenceOptions{}.seed;
};

/// Labelings, shift and intertwiner assembled from the graph file and the
/// optional --mu / --phi overrides.
struct Setup {
  ShiftPermutation shift;
  EquivalenceMap map;
};

Setup load_setup(const CommonOptions& opts) {
  auto spec = io::parse_graph(io::read_file(opts.graph));
  std::optional<PortTable> table = spec.shift_table;
  if (!opts.mu.empty()) table = io::parse_port_table(io::read_file(opts.mu), "mu");
  ShiftPermutation shift = table ? ShiftPermutation::from_table(spec.coin_graph, *table)
                                 : ShiftPermutation::flip_flop(spec.coin_graph);

  if (opts.phi.empty()) {
    if (spec.scattering_graph) return {shift, EquivalenceMap(shift, *spec.scattering_graph)};
    return {shift, EquivalenceMap(shift)};
  }
  const PortTable phi = io::parse_port_table(io::read_file(opts.phi), "phi");
  if (spec.scattering_graph) {
    return {shift, EquivalenceMap(shift, *spec.scattering_graph,
                                  EdgeLabelBijection::from_table(*spec.scattering_graph, phi))};
  }
  // Without a second labeling φ defines it: scattering port σ is the edge of
  // coin port φ(σ;j).
  const PortedGraph& coin = spec.coin_graph;
  const auto labels = EdgeLabelBijection::from_table(coin, phi);
  std::map<NodeId, std::vector<NodeId>> order;
  for (NodeId j : coin.nodes())
    for (Port s = 1; s <= coin.degree(j); ++s) order[j].push_back(coin.neighbor(j, labels(j, s)));
  const auto edges = coin.edges();
  PortedGraph scattering = PortedGraph::from_edges(edges, order);
  return {shift, EquivalenceMap(shift, scattering, EdgeLabelBijection::from_table(scattering, phi))};
}

Model parse_model(const std::string& name) {
  if (name == "coin") return Model::Coin;
  if (name == "scattering") return Model::Scattering;
  throw Error(ErrorKind::ParseError, "unknown model '" + name + "'");
}

io::UnitarySpec load_unitary(const std::string& path, UnitaryRole expected) {
  auto spec = io::parse_unitary(io::read_file(path));
  if (spec.role != expected)
    throw Error(ErrorKind::ParseError, path + " holds \"" + to_string(spec.role) + "\" matrices, expected \"" +
                                           to_string(expected) + "\"");
  return spec;
}

std::string render(const std::vector<Distribution>& steps, const std::string& format) {
  if (format == "csv") return io::to_csv(steps);
  if (format == "json") return io::to_json(steps);
  if (format == "human") {
    std::string out;
    char line[128];
    for (std::size_t n = 0; n < steps.size(); ++n) {
      for (const auto& [label, p] : steps[n].entries) {
        if (p == 0.0) continue;
        std::snprintf(line, sizeof(line), "%6zu  %-12s %.6f\n", n, label.c_str(), p);
        out += line;
      }
    }
    return out;
  }
  throw Error(ErrorKind::ParseError, "unknown format '" + format + "'");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    io::write_file(path, text);
}

/// Runs the configured walk for `steps` steps, measuring every state with
/// each of the given partitions.
std::vector<std::vector<Distribution>> run_walk(const RunOptions& opts, const Setup& setup,
                                                const std::vector<Partition>& partitions) {
  if (opts.steps < 0) throw Error(ErrorKind::ParseError, "--steps must be non-negative");
  const Model model = parse_model(opts.model);
  std::vector<std::vector<Distribution>> out(partitions.size());
  auto record = [&](const WalkState& state) {
    for (std::size_t i = 0; i < partitions.size(); ++i)
      out[i].push_back(distribution(state, partitions[i], setup.map));
  };

  if (model == Model::Coin) {
    const auto spec = load_unitary(opts.unitary, UnitaryRole::Coin);
    const CoinWalkOperator op(setup.shift, io::build_family(spec, setup.map.coin_graph()));
    WalkState state = io::parse_initial_state(io::read_file(opts.init), op.graph(), Model::Coin);
    record(state);
    for (long n = 0; n < opts.steps; ++n) {
      state = step_coin(state, op);
      record(state);
    }
  } else {
    const auto spec = load_unitary(opts.unitary, UnitaryRole::Scattering);
    const ScatteringWalkOperator op(setup.map.scattering_graph(),
                                    io::build_family(spec, setup.map.scattering_graph()));
    WalkState state = io::parse_initial_state(io::read_file(opts.init), op.graph(), Model::Scattering);
    record(state);
    for (long n = 0; n < opts.steps; ++n) {
      state = step_scattering(state, op);
      record(state);
    }
  }
  return out;
}

int cmd_simulate(const RunOptions& opts) {
  const Setup setup = load_setup(opts.common);
  const Partition native = parse_model(opts.model) == Model::Coin ? Partition::CoinNodes : Partition::ScatteringEdges;
  const auto runs = run_walk(opts, setup, {native});
  emit(opts.out, render(runs[0], opts.format));
  return 0;
}

int cmd_cross_prob(const RunOptions& opts) {
  const Setup setup = load_setup(opts.common);
  const Partition native = parse_model(opts.model) == Model::Coin ? Partition::CoinNodes : Partition::ScatteringEdges;
  const auto runs = run_walk(opts, setup, {native, Partition::Cross});
  emit(opts.native_out, render(runs[0], opts.format));
  emit(opts.cross_out, render(runs[1], opts.format));
  return 0;
}

int cmd_equiv_check(const AuditOptions& opts) {
  const Setup setup = load_setup(opts.common);
  const auto coins = io::build_family(load_unitary(opts.coin, UnitaryRole::Coin), setup.map.coin_graph());
  const CoinWalkOperator coin_op(setup.shift, coins);

  std::map<std::string, double> extra;
  std::optional<Error> gamma_problem;
  LocalUnitaryFamily gammas = setup.map.scattering_from_coin(coins);
  if (!opts.gamma.empty()) {
    // Loaded without the unitarity gate so the report can still quantify the
    // mismatch; the violation is raised after the report is written.
    gammas = io::build_family(load_unitary(opts.gamma, UnitaryRole::Scattering), setup.map.scattering_graph(),
                              false);
    const double dev = gammas.max_unitarity_deviation();
    extra["gamma_unitarity_deviation"] = dev;
    if (!(dev < LocalUnitaryFamily::kUnitarityTolerance))
      gamma_problem = Error(ErrorKind::UnitarityViolation,
                            "supplied scattering matrices deviate from unitary by " + io::format_double(dev));
  }
  const ScatteringWalkOperator scattering_op(setup.map.scattering_graph(), gammas);

  EquivalenceOptions options;
  options.tolerance = opts.tol;
  options.dense_cap = opts.dense_cap;
  options.trials = opts.trials;
  options.seed = opts.seed;
  const auto report = verify_equivalence(coin_op, scattering_op, setup.map, options);
  emit(opts.report, io::report_to_json(report, extra));

  if (gamma_problem) throw *gamma_problem;
  if (!report.passed) {
    std::cerr << "equivalence check failed: dense deviation " << io::format_double(report.dense_deviation)
              << ", sparse deviation " << io::format_double(report.sparse_deviation) << "\n";
    return kExitNumerical;
  }
  return 0;
}

int cmd_validate_graph(const CommonOptions& opts) {
  const Setup setup = load_setup(opts);
  const PortedGraph& g = setup.map.coin_graph();
  nlohmann::ordered_json out;
  out["nodes"] = g.node_count();
  out["edges"] = g.edge_count();
  out["dimension"] = g.dimension();
  out["regular_degree"] = g.regular_degree();
  out["flip_flop_shift"] = setup.shift == ShiftPermutation::flip_flop(g);
  out["same_labelings"] = setup.map.edge_map().is_identity();
  nlohmann::ordered_json problems = nlohmann::ordered_json::array();
  for (const auto& v : validate(g)) problems.push_back({{"node", v.node}, {"port", v.port}, {"what", v.what}});
  for (const auto& v : validate(setup.map.scattering_graph()))
    problems.push_back({{"node", v.node}, {"port", v.port}, {"what", "scattering labeling: " + v.what}});
  for (const auto& v : check_identities(setup.shift))
    problems.push_back({{"node", v.node}, {"port", v.port}, {"what", v.what}});
  out["violations"] = problems;
  std::cout << out.dump(2) << "\n";
  return problems.empty() ? 0 : kExitConfig;
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Numerical: return kExitNumerical;
    case ErrorCategory::Dimension: return kExitDimension;
    case ErrorCategory::Config: break;
  }
  return kExitConfig;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--graph", opts.graph, "graph JSON file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--mu", opts.mu, "shift table JSON file ({\"mu\": ...}), overrides the graph file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--phi", opts.phi, "scattering-to-coin port map JSON file ({\"phi\": ...})")
      ->check(CLI::ExistingFile);
}

void add_run(CLI::App* cmd, RunOptions& opts) {
  add_common(cmd, opts.common);
  cmd->add_option("--model", opts.model, "walk model")->check(CLI::IsMember({"coin", "scattering"}));
  cmd->add_option("--unitary", opts.unitary, "coin or gamma JSON file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--init", opts.init, "initial state JSON file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--steps", opts.steps, "number of steps")->required();
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"csv", "json", "human"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coin and scattering quantum walks on arbitrary graphs"};
  app.require_subcommand(1);

  RunOptions simulate;
  auto* sim = app.add_subcommand("simulate", "run one walk and write its distribution per step");
  add_run(sim, simulate);
  sim->add_option("--out", simulate.out, "output file (default stdout)");

  RunOptions cross;
  auto* xp = app.add_subcommand("cross-prob", "run one walk and write native and cross-mapped distributions");
  add_run(xp, cross);
  xp->add_option("--native", cross.native_out, "native distribution file")->required();
  xp->add_option("--cross", cross.cross_out, "cross-mapped distribution file")->required();

  AuditOptions audit;
  auto* eq = app.add_subcommand("equiv-check", "verify U_s = E† U_c E for the configured walk");
  add_common(eq, audit.common);
  eq->add_option("--coin", audit.coin, "coin JSON file")->required()->check(CLI::ExistingFile);
  eq->add_option("--gamma", audit.gamma, "scattering matrices to audit instead of the derived ones")
      ->check(CLI::ExistingFile);
  eq->add_option("--report", audit.report, "report JSON file")->required();
  eq->add_option("--tol", audit.tol, "pass threshold")->capture_default_str();
  eq->add_option("--dense-cap", audit.dense_cap, "largest dimension compared densely")->capture_default_str();
  eq->add_option("--trials", audit.trials, "random states in the sparse check")->capture_default_str();
  eq->add_option("--seed", audit.seed, "seed for the random states")->capture_default_str();

  CommonOptions check;
  auto* vg = app.add_subcommand("validate-graph", "check graph, shift and labeling invariants");
  add_common(vg, check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sim) return cmd_simulate(simulate);
    if (*xp) return cmd_cross_prob(cross);
    if (*eq) return cmd_equiv_check(audit);
    if (*vg) return cmd_validate_graph(check);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
