#include "netcx/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <ostream>

#include "netcx/error.hpp"
#include "netcx/io.hpp"
#include "netcx/matching.hpp"
#include "netcx/random.hpp"

namespace netcx {

void ExperimentConfig::validate() const {
  if (generator.has_value() == input_graph.has_value()) {
    throw InputError("experiment needs exactly one of a generator or an input graph");
  }
  if (generator) generator->validate();
  if (trials < 1) throw InputError("trials must be at least 1");
  if (k_values.empty()) throw InputError("k_values must not be empty");
  const std::size_t n = node_count();
  for (std::size_t k : k_values) {
    if (k < 1 || k > n) {
      throw InputError("k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
  }
}

std::size_t ExperimentConfig::node_count() const {
  return generator ? generator->n : input_graph->node_count();
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) noexcept {
  return derive_seed(master, {trial});
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  using clock = std::chrono::steady_clock;
  const std::size_t n = config.node_count();

  // One graph per trial, shared by every k so the k-sweep is paired.
  std::vector<DirectedGraph> graphs;
  graphs.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const std::uint64_t gs = derive_seed(trial_seed(config.master_seed, t), {stream::graph});
    if (config.generator) {
      GeneratorSpec spec = *config.generator;
      spec.seed = gs;
      graphs.push_back(generate(spec));
    } else {
      graphs.push_back(rewire_uniform(*config.input_graph, gs));
    }
  }

  ExperimentResult result;
  result.records.reserve(config.k_values.size() * config.trials);
  for (std::size_t k : config.k_values) {
    std::vector<double> phis;
    phis.reserve(config.trials);
    for (std::size_t t = 0; t < config.trials; ++t) {
      const auto start = clock::now();
      const std::uint64_t ts = trial_seed(config.master_seed, t);
      const DirectedGraph& g = graphs[t];
      const auto partition = random_partition(n, k, derive_seed(ts, {stream::partition, k}));
      const auto cut = edge_cut(g, partition, CutDirection::outgoing);

      ResultRecord rec;
      rec.trial = t;
      rec.k = k;
      rec.n = n;
      rec.seed = ts;
      for (const auto& sub : cut) {
        rec.per_block.push_back(matching_number(sub));
        rec.phi_structural += rec.per_block.back();
      }
      rec.bounds = bounds(g);
      if (config.compute_numerical) {
        Rng rng(derive_seed(ts, {stream::weights, k}));
        rec.phi_numerical = numerical_complexity(
            sample_weights(g, rng), DynamicsAssignment::from_partition(partition), config.tolerance);
      }
      rec.wall_time_ms =
          std::chrono::duration<double, std::milli>(clock::now() - start).count();
      phis.push_back(static_cast<double>(rec.phi_structural));
      result.records.push_back(std::move(rec));
    }
    result.summary.push_back(summarize(k, phis));
  }
  return result;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InputError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

KSummary summarize(std::size_t k, const std::vector<double>& values) {
  KSummary s;
  s.k = k;
  s.count = values.size();
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  return s;
}

void write_records_csv(std::ostream& out, const std::vector<ResultRecord>& records) {
  const bool numeric = std::any_of(records.begin(), records.end(),
                                   [](const ResultRecord& r) { return r.phi_numerical.has_value(); });
  out << "trial,k,phi_structural,lower,upper,phi_over_n,seed";
  if (numeric) out << ",phi_numerical";
  out << '\n';
  for (const auto& r : records) {
    out << r.trial << ',' << r.k << ',' << r.phi_structural << ',' << r.bounds.lower << ','
        << r.bounds.upper << ',' << format_ratio(r.phi_over_n()) << ',' << r.seed;
    if (numeric) {
      out << ',';
      if (r.phi_numerical) out << *r.phi_numerical;
    }
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<KSummary>& summary) {
  out << "k,count,min,q1,median,q3,max,mean\n";
  char buf[256];
  for (const auto& s : summary) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f\n", s.k, s.count,
                  s.min, s.q1, s.median, s.q3, s.max, s.mean);
    out << buf;
  }
}

Table1Result run_table1(const DirectedGraph& g, const DynamicsAssignment& d,
                        std::size_t rewire_trials, std::uint64_t seed) {
  if (d.node_count() != g.node_count()) throw InputError("groups do not cover the graph");
  if (rewire_trials < 1) throw InputError("rewire_trials must be at least 1");
  Table1Result r;
  r.n = g.node_count();
  r.edges = g.edge_count();
  r.k = d.block_count();
  r.seed = seed;
  r.rewire_trials = rewire_trials;
  r.phi_true = structural_index(g, d.partition());
  const double n = static_cast<double>(r.n);
  r.normalized_true = r.n == 0 ? 0.0 : static_cast<double>(r.phi_true) / n;
  std::size_t total = 0;
  r.min_phi_rand = SIZE_MAX;
  for (std::size_t t = 0; t < rewire_trials; ++t) {
    const auto rg = rewire_uniform(g, derive_seed(seed, {stream::graph, t}));
    const std::size_t phi = structural_index(rg, d.partition());
    total += phi;
    r.min_phi_rand = std::min(r.min_phi_rand, phi);
    r.max_phi_rand = std::max(r.max_phi_rand, phi);
  }
  r.mean_phi_rand = static_cast<double>(total) / static_cast<double>(rewire_trials);
  r.normalized_rand = r.n == 0 ? 0.0 : r.mean_phi_rand / n;
  return r;
}

std::string to_json(const Table1Result& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["k"] = r.k;
  j["phi_true"] = r.phi_true;
  j["phi_over_n_true"] = format_ratio(r.normalized_true);
  j["rewire_trials"] = r.rewire_trials;
  j["mean_phi_rand"] = r.mean_phi_rand;
  j["phi_over_n_rand"] = format_ratio(r.normalized_rand);
  j["min_phi_rand"] = r.min_phi_rand;
  j["max_phi_rand"] = r.max_phi_rand;
  j["seed"] = r.seed;
  return j.dump(2) + "\n";
}

}  // namespace netcx
