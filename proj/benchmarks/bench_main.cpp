#include <benchmark/benchmark.h>

#include <netcx/complexity.hpp>
#include <netcx/generators.hpp>
#include <netcx/matching.hpp>
#include <netcx/numlin.hpp>

#include <random>

namespace {

using namespace netcx;

DirectedGraph ba_graph(std::size_t n, std::size_t m) {
  GeneratorSpec s;
  s.model = GraphModel::barabasi_albert;
  s.n = n;
  s.m = m;
  s.seed = 1;
  return generate(s);
}

void BM_MatchingNumber(benchmark::State& state) {
  const auto g = ba_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(g));
  state.SetComplexityN(static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_MatchingNumber)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_StructuralComplexity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = ba_graph(n, 2);
  const auto d = DynamicsAssignment::from_partition(random_partition(n, static_cast<std::size_t>(state.range(1)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(structural_complexity(g, d).phi_structural);
}
BENCHMARK(BM_StructuralComplexity)->ArgsProduct({{100, 1000, 10000}, {1, 25, 100}});

void BM_NumericalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> z;
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = z(rng);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_rank(m));
}
BENCHMARK(BM_NumericalRank)->RangeMultiplier(2)->Range(8, 128);

void BM_NumericalComplexity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const auto g = sample_weights(ba_graph(n, 2), rng);
  const auto part = random_partition(n, 5, 5);
  const auto d = DynamicsAssignment::from_partition(part, sample_block_poles(5, rng));
  for (auto _ : state) benchmark::DoNotOptimize(numerical_complexity(g, d));
}
BENCHMARK(BM_NumericalComplexity)->Arg(50)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
