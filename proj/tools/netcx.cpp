// netcx: structural complexity of networks of first-order linear systems.

#include <CLI11.hpp>

#include <netcx/complexity.hpp>
#include <netcx/error.hpp>
#include <netcx/experiment.hpp>
#include <netcx/generators.hpp>
#include <netcx/io.hpp>
#include <netcx/matching.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace netcx;

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
};

struct InputOptions {
  std::string edges;
  bool require_header = false;

  DirectedGraph load() const { return parse_edge_list(edges, {.require_header = require_header}); }
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool required = true) {
  auto* opt = cmd->add_option("--edges", in.edges,
                              "Edge list file: one src,dst[,weight] per line, '#' comments, "
                              "optional leading n=<count> header");
  if (required) opt->required();
  cmd->add_flag("--require-header", in.require_header,
                "Reject edge lists without an n=<count> header");
}

void emit(const GlobalOptions& g, const std::string& payload) {
  if (g.out.empty() || g.out == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + g.out + "'");
  f << payload;
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
  InputOptions input;
  std::string groups;
  std::optional<std::size_t> random_groups;
  double gamma_tol = 0.0;
  bool numerical = false;
  std::size_t genericity_trials = 0;
  std::size_t oracle_max_n = 150;
};

int run_compute(const GlobalOptions& g, const ComputeOptions& o) {
  const DirectedGraph graph = o.input.load();
  DynamicsAssignment dyn = DynamicsAssignment::from_partition(NodePartition::single_block(graph.node_count()));
  if (!o.groups.empty()) {
    dyn = parse_groups(o.groups, graph, o.gamma_tol);
  } else if (o.random_groups) {
    dyn = DynamicsAssignment::from_partition(random_partition(
        graph.node_count(), *o.random_groups, derive_seed(g.seed, {stream::partition})));
  }

  ComplexityReport report = structural_complexity(graph, dyn);
  if (o.numerical) {
    NumericalResult num;
    num.tolerance = g.tol;
    DirectedGraph weighted = graph;
    if (!graph.has_weights()) {
      num.weight_seed = derive_seed(g.seed, {stream::weights});
      Rng rng(*num.weight_seed);
      weighted = sample_weights(graph, rng);
    }
    DynamicsAssignment poles = dyn;
    if (!dyn.has_poles()) {
      num.pole_seed = derive_seed(g.seed, {stream::poles});
      Rng rng(*num.pole_seed);
      poles = dyn.with_poles(sample_block_poles(dyn.block_count(), rng, feasible_pole_gap(dyn.block_count())));
    }
    num.phi = numerical_complexity(weighted, poles, g.tol);
    if (graph.node_count() <= o.oracle_max_n) num.oracle = mcmillan_oracle(weighted, poles, g.tol);
    report.numerical = num;
  }
  if (o.genericity_trials > 0) {
    report.genericity = genericity_check(graph, dyn, o.genericity_trials,
                                         derive_seed(g.seed, {stream::weights, 1}), g.tol);
  }
  emit(g, to_json(report));
  return 0;
}

// ---------------------------------------------------------------- bounds

int run_bounds(const GlobalOptions& g, const InputOptions& in) {
  const DirectedGraph graph = in.load();
  const Bounds b = bounds(graph);
  nlohmann::ordered_json j;
  j["n"] = graph.node_count();
  j["edges"] = graph.edge_count();
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["sinks"] = graph.node_count() - b.upper;
  j["n_min"] = min_inputs(graph);
  emit(g, j.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- generate

struct ModelOptions {
  std::string model = "ba";
  std::size_t n = 100;
  std::size_t m = 1;
  std::size_t ring_degree = 4;
  double p = 0.0;
  std::string orientation = "bidirected";

  GeneratorSpec spec(std::uint64_t seed) const {
    GeneratorSpec s;
    s.model = parse_graph_model(model);
    s.n = n;
    s.m = m;
    s.ring_degree = ring_degree;
    s.p = p;
    s.orientation = parse_orientation(orientation);
    s.seed = seed;
    return s;
  }
};

void add_model_options(CLI::App* cmd, ModelOptions& mo) {
  cmd->add_option("--model", mo.model, "Graph model: ba (Barabasi-Albert) or ws (Watts-Strogatz)")
      ->capture_default_str();
  cmd->add_option("--n", mo.n, "Node count")->capture_default_str();
  cmd->add_option("--m", mo.m, "BA attachment edges per new node")->capture_default_str();
  cmd->add_option("--ring-degree", mo.ring_degree, "WS lattice degree (even)")->capture_default_str();
  cmd->add_option("--p", mo.p, "WS rewiring probability")->capture_default_str();
  cmd->add_option("--orientation", mo.orientation,
                  "bidirected: both directions per undirected edge; forward: generation order")
      ->capture_default_str();
}

int run_generate(const GlobalOptions& g, const ModelOptions& mo) {
  std::ostringstream out;
  write_edge_list(out, generate(mo.spec(g.seed)));
  emit(g, out.str());
  return 0;
}

int run_rewire(const GlobalOptions& g, const InputOptions& in) {
  std::ostringstream out;
  write_edge_list(out, rewire_uniform(in.load(), g.seed));
  emit(g, out.str());
  return 0;
}

// ---------------------------------------------------------------- experiment

struct ExperimentOptions {
  ModelOptions model;
  InputOptions input;
  std::vector<std::size_t> k_values{1, 25, 50, 75, 100};
  std::size_t trials = 100;
  bool numerical = false;
  std::string summary;
};

int run_experiment_cmd(const GlobalOptions& g, const ExperimentOptions& o) {
  ExperimentConfig c;
  if (!o.input.edges.empty()) {
    c.input_graph = o.input.load();
  } else {
    c.generator = o.model.spec(0);
  }
  c.k_values = o.k_values;
  c.trials = o.trials;
  c.master_seed = g.seed;
  c.compute_numerical = o.numerical;
  c.tolerance = g.tol;
  const auto result = run_experiment(c);

  std::ostringstream rows, summary;
  write_records_csv(rows, result.records);
  write_summary_csv(summary, result.summary);
  if (g.out.empty() || g.out == "-") {
    std::cout << rows.str() << '\n' << summary.str();
    return 0;
  }
  emit(g, rows.str());
  GlobalOptions s = g;
  s.out = o.summary.empty() ? g.out + ".summary.csv" : o.summary;
  emit(s, summary.str());
  return 0;
}

// ---------------------------------------------------------------- table1

struct Table1Options {
  InputOptions input;
  std::string groups;
  std::size_t rewire_trials = 100;
};

int run_table1_cmd(const GlobalOptions& g, const Table1Options& o) {
  const DirectedGraph graph = o.input.load();
  const DynamicsAssignment dyn = parse_groups(o.groups, graph);
  emit(g, to_json(run_table1(graph, dyn, o.rewire_trials, g.seed)));
  return 0;
}

constexpr const char* kTable1Help =
    "Normalized structural complexity of a real network and of its uniform rewirings.\n"
    "Datasets are not bundled. Expected sources:\n"
    "  CE  C. elegans chemical synapse connectome (Varshney et al., 2011),\n"
    "      groups: sensory / interneuron / motor\n"
    "  PG  Northern European power grid (Menck et al., 2014),\n"
    "      groups: net generator / net consumer\n"
    "  PB  US political blogs hyperlink network (Adamic and Glance, 2005),\n"
    "      groups: liberal / conservative";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netcx: structural complexity index of directed networks of first-order linear systems"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Master random seed")->capture_default_str();
  app.add_option("--tol", global.tol,
                 "Absolute singular-value threshold for numerical ranks "
                 "(default: sigma_max * max(rows, cols) * eps)");
  app.add_option("--out", global.out, "Output file (default: stdout)");

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Structural complexity report (JSON)");
  add_input_options(c, compute.input);
  auto* groups_opt = c->add_option("--groups", compute.groups,
                                   "Groups file: node_id,group_label or node_id,gamma_value");
  c->add_option("--random-groups", compute.random_groups,
                "Assign nodes to K random non-empty groups instead of reading --groups")
      ->excludes(groups_opt);
  c->add_option("--gamma-tol", compute.gamma_tol,
                "Merge gamma values closer than this (default 0: exact equality)")
      ->capture_default_str();
  c->add_flag("--numerical", compute.numerical,
              "Also compute the numerical index and both realization oracles "
              "(samples standard-normal weights / poles when absent)");
  c->add_option("--oracle-max-n", compute.oracle_max_n,
                "Skip the realization oracles above this node count (their stack is n^2 x n)")
      ->capture_default_str();
  c->add_option("--genericity-trials", compute.genericity_trials,
                "Monte Carlo weight draws comparing numerical and structural index")
      ->capture_default_str();

  InputOptions bounds_in;
  auto* b = app.add_subcommand("bounds", "Partition-free bounds and N_min (JSON)");
  add_input_options(b, bounds_in);

  ModelOptions gen;
  auto* gcmd = app.add_subcommand("generate", "Generate a BA or WS graph as an edge list");
  add_model_options(gcmd, gen);

  InputOptions rewire_in;
  auto* r = app.add_subcommand("rewire", "Uniformly rewire an edge list, keeping the edge count");
  add_input_options(r, rewire_in);

  ExperimentOptions exp;
  auto* e = app.add_subcommand("experiment",
                               "Monte Carlo sweep over group counts (CSV rows + summary CSV)");
  add_model_options(e, exp.model);
  add_input_options(e, exp.input, false);
  e->add_option("--k", exp.k_values, "Group counts")->delimiter(',')->capture_default_str();
  e->add_option("--trials", exp.trials, "Monte Carlo runs per k")->capture_default_str();
  e->add_flag("--numerical", exp.numerical, "Add a sampled-weight numerical index column");
  e->add_option("--summary", exp.summary, "Summary CSV path (default: <out>.summary.csv)");

  Table1Options t1;
  auto* t = app.add_subcommand("table1", kTable1Help);
  add_input_options(t, t1.input);
  t->add_option("--groups", t1.groups, "Groups file (labels)")->required();
  t->add_option("--rewire-trials", t1.rewire_trials, "Uniform rewirings to average")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    std::cerr << error_json("input", ex.what()) << '\n';
    return kExitInput;
  }

  try {
    if (*c) return run_compute(global, compute);
    if (*b) return run_bounds(global, bounds_in);
    if (*gcmd) return run_generate(global, gen);
    if (*r) return run_rewire(global, rewire_in);
    if (*e) return run_experiment_cmd(global, exp);
    if (*t) return run_table1_cmd(global, t1);
  } catch (const InputError& ex) {
    std::cerr << error_json("input", ex.what()) << '\n';
    return kExitInput;
  } catch (const NumericalError& ex) {
    std::cerr << error_json("numerical", ex.what()) << '\n';
    return kExitNumerical;
  } catch (const std::exception& ex) {
    std::cerr << error_json("internal", ex.what()) << '\n';
    return kExitNumerical;
  }
  return 0;
}
