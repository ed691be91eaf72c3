#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netcx/complexity.hpp"
#include "netcx/generators.hpp"
#include "netcx/graph.hpp"

namespace netcx {

/// Monte Carlo sweep over group counts. Each trial either generates a fresh
/// graph from `generator` or rewires `input_graph` uniformly, then draws a
/// random partition for every k.
struct ExperimentConfig {
  std::optional<GeneratorSpec> generator;   // seed field is ignored
  std::optional<DirectedGraph> input_graph;
  std::vector<std::size_t> k_values;
  std::size_t trials = 100;
  std::uint64_t master_seed = 0;
  bool compute_numerical = false;
  std::optional<double> tolerance;

  /// Throws InputError: exactly one graph source, trials >= 1, non-empty
  /// k_values each within [1, n].
  void validate() const;
  std::size_t node_count() const;
};

struct ResultRecord {
  std::size_t trial = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t phi_structural = 0;
  std::vector<std::size_t> per_block;
  Bounds bounds;
  std::optional<std::size_t> phi_numerical;
  std::uint64_t seed = 0;     // trial seed; graph, partition and weights derive from it
  double wall_time_ms = 0.0;  // not part of the persisted table

  double phi_over_n() const noexcept {
    return n == 0 ? 0.0 : static_cast<double>(phi_structural) / static_cast<double>(n);
  }
};

/// Box-plot statistics of phi_structural for one k.
struct KSummary {
  std::size_t k = 0;
  std::size_t count = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

struct ExperimentResult {
  std::vector<ResultRecord> records;  // ordered by k (config order), then trial
  std::vector<KSummary> summary;      // one per k, config order
};

/// Seed of trial `t` under `master`.
std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) noexcept;

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Linear-interpolation quantile (the R type 7 rule) of unsorted data.
double quantile(std::vector<double> values, double q);

KSummary summarize(std::size_t k, const std::vector<double>& values);

/// Header `trial,k,phi_structural,lower,upper,phi_over_n,seed`, plus a
/// trailing `phi_numerical` column when any record carries one.
void write_records_csv(std::ostream& out, const std::vector<ResultRecord>& records);

/// Header `k,count,min,q1,median,q3,max,mean`.
void write_summary_csv(std::ostream& out, const std::vector<KSummary>& summary);

struct Table1Result {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t k = 0;
  std::size_t phi_true = 0;
  double normalized_true = 0.0;
  std::size_t rewire_trials = 0;
  double mean_phi_rand = 0.0;
  double normalized_rand = 0.0;
  std::size_t min_phi_rand = 0;
  std::size_t max_phi_rand = 0;
  std::uint64_t seed = 0;
};

/// Normalized index of a network and the mean over uniform rewirings that keep
/// the group assignment. Rewiring t uses derive_seed(seed, {graph, t}).
Table1Result run_table1(const DirectedGraph& g, const DynamicsAssignment& d,
                        std::size_t rewire_trials, std::uint64_t seed);

std::string to_json(const Table1Result& r);

}  // namespace netcx
