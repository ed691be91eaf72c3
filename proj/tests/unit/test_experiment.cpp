#include <doctest.h>

#include <netcx/error.hpp>
#include <netcx/experiment.hpp>

#include <algorithm>
#include <sstream>

using namespace netcx;

namespace {

ExperimentConfig ws_config(std::size_t trials) {
  ExperimentConfig c;
  GeneratorSpec s;
  s.model = GraphModel::watts_strogatz;
  s.n = 100;
  s.ring_degree = 4;
  s.p = 0.5;
  c.generator = s;
  c.k_values = {1, 25, 50, 75, 100};
  c.trials = trials;
  c.master_seed = 17;
  return c;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("config validation") {
    ExperimentConfig c;
    CHECK_THROWS_AS(c.validate(), InputError);
    c = ws_config(1);
    c.k_values = {};
    CHECK_THROWS_AS(c.validate(), InputError);
    c = ws_config(1);
    c.k_values = {101};
    CHECK_THROWS_AS(c.validate(), InputError);
    c = ws_config(0);
    CHECK_THROWS_AS(c.validate(), InputError);
    c = ws_config(1);
    c.input_graph = DirectedGraph(100, {});
    CHECK_THROWS_AS(c.validate(), InputError);
  }

  TEST_CASE("empty input graph gives zero") {
    ExperimentConfig c;
    c.input_graph = DirectedGraph(4, {});
    c.k_values = {1};
    c.trials = 1;
    auto r = run_experiment(c);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].phi_structural == 0);
    CHECK(r.summary.size() == 1);
  }

  TEST_CASE("row accounting and summary") {
    auto r = run_experiment(ws_config(100));
    CHECK(r.records.size() == 500);
    CHECK(r.summary.size() == 5);
    std::ostringstream rows, summary;
    write_records_csv(rows, r.records);
    write_summary_csv(summary, r.summary);
    CHECK(count_lines(rows.str()) == 501);
    CHECK(count_lines(summary.str()) == 6);
    CHECK(rows.str().starts_with("trial,k,phi_structural,lower,upper,phi_over_n,seed\n"));
    CHECK(summary.str().starts_with("k,count,min,q1,median,q3,max,mean\n"));
    for (const auto& rec : r.records) {
      CHECK(rec.bounds.lower <= rec.phi_structural);
      CHECK(rec.phi_structural <= rec.bounds.upper);
      CHECK(rec.per_block.size() == rec.k);
    }
  }

  TEST_CASE("byte-identical reruns") {
    auto c = ws_config(10);
    c.compute_numerical = true;
    c.k_values = {1, 3};
    c.generator->n = 12;
    std::ostringstream a, b;
    write_records_csv(a, run_experiment(c).records);
    write_records_csv(b, run_experiment(c).records);
    CHECK(a.str() == b.str());
    CHECK(a.str().find(",phi_numerical\n") != std::string::npos);
  }

  TEST_CASE("rewired input graph") {
    ExperimentConfig c;
    std::vector<Edge> e;
    for (NodeId v = 0; v < 20; ++v) e.push_back({v, static_cast<NodeId>((v + 1) % 20)});
    c.input_graph = DirectedGraph(20, e);
    c.k_values = {1, 20};
    c.trials = 5;
    auto r = run_experiment(c);
    CHECK(r.records.size() == 10);
    for (const auto& rec : r.records) CHECK(rec.n == 20);
  }

  TEST_CASE("quantiles") {
    CHECK(quantile({1, 2, 3, 4}, 0.5) == doctest::Approx(2.5));
    CHECK(quantile({4, 1, 3, 2}, 0.25) == doctest::Approx(1.75));
    CHECK(quantile({5}, 0.75) == 5);
    CHECK_THROWS_AS(quantile({}, 0.5), InputError);
    auto s = summarize(3, {1, 2, 3, 4, 10});
    CHECK(s.median == 3);
    CHECK(s.min == 1);
    CHECK(s.max == 10);
    CHECK(s.mean == doctest::Approx(4.0));
  }

  TEST_CASE("table1 on small inputs") {
    auto empty = run_table1(DirectedGraph(6, {}), DynamicsAssignment::from_partition(random_partition(6, 2, 1)), 10, 3);
    CHECK(empty.normalized_true == 0.0);
    CHECK(empty.normalized_rand == 0.0);

    std::vector<Edge> e;
    for (NodeId v = 0; v < 10; ++v) e.push_back({v, static_cast<NodeId>((v + 1) % 10)});
    DirectedGraph ring(10, e);
    auto d = DynamicsAssignment::from_partition(NodePartition::single_block(10));
    auto r = run_table1(ring, d, 20, 4);
    CHECK(r.phi_true == 10);
    CHECK(r.normalized_true == 1.0);
    CHECK(r.min_phi_rand <= r.max_phi_rand);
    CHECK(r.mean_phi_rand <= 10.0);
    auto again = run_table1(ring, d, 20, 4);
    CHECK(to_json(r) == to_json(again));
  }
}
