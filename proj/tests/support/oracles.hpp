#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library's matching or SVD code.

#include <netcx/graph.hpp>
#include <netcx/numlin.hpp>
#include <netcx/random.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace netcx::testing {

/// Largest subset of (start, end) pairs with pairwise distinct starts and
/// pairwise distinct ends, by enumerating every subset.
inline std::size_t brute_force_matching(const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  if (arcs.size() > 20) throw std::invalid_argument("brute force limited to 20 arcs");
  std::size_t best = 0;
  const std::uint32_t subsets = 1u << arcs.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < arcs.size() && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (!(mask >> j & 1u)) continue;
        if (arcs[i].first == arcs[j].first || arcs[i].second == arcs[j].second) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = size;
  }
  return best;
}

inline std::size_t brute_force_matching(const DirectedGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const Edge& e : g.edges()) arcs.emplace_back(e.src, e.dst);
  return brute_force_matching(arcs);
}

inline std::size_t brute_force_structural_rank(const SparsityPattern& p) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& e : p.nonzeros()) arcs.emplace_back(e.row, e.col);
  return brute_force_matching(arcs);
}

/// Rank by Gaussian elimination with full pivoting and a relative threshold.
inline std::size_t elimination_rank(const DenseMatrix& m, double rel_tol = 1e-9) {
  std::vector<std::vector<double>> a(m.rows(), std::vector<double>(m.cols()));
  double scale = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      a[i][j] = m(i, j);
      scale = std::max(scale, std::abs(a[i][j]));
    }
  if (scale == 0.0) return 0;
  std::vector<bool> row_used(m.rows(), false), col_used(m.cols(), false);
  std::size_t rank = 0;
  while (true) {
    double best = 0.0;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!col_used[j] && std::abs(a[i][j]) > best) {
          best = std::abs(a[i][j]);
          pr = i;
          pc = j;
        }
      }
    }
    if (best <= rel_tol * scale) break;
    row_used[pr] = col_used[pc] = true;
    ++rank;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (row_used[i]) continue;
      const double f = a[i][pc] / a[pr][pc];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[pr][j];
    }
  }
  return rank;
}

/// Random simple digraph (no self-loops unless requested), each ordered pair
/// present with probability `density`.
inline DirectedGraph random_digraph(std::size_t n, double density, Rng& rng,
                                    bool self_loops = false) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if ((u != v || self_loops) && coin(rng)) edges.push_back({u, v});
  return DirectedGraph(n, std::move(edges));
}

/// Random digraph with exactly `m` distinct arcs (self-loops allowed).
inline DirectedGraph random_digraph_with_edges(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> all;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return DirectedGraph(n, std::move(all));
}

}  // namespace netcx::testing
