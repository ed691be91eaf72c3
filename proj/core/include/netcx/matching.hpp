#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netcx/graph.hpp"

namespace netcx {

inline constexpr std::uint32_t kUnmatched = UINT32_MAX;

/// Maximum matching of a bipartite graph with `left` and `right` vertex sets.
struct BipartiteMatching {
  std::size_t size = 0;
  std::vector<std::uint32_t> mate_left;   // left vertex -> right vertex or kUnmatched
  std::vector<std::uint32_t> mate_right;  // right vertex -> left vertex or kUnmatched
};

/// Hopcroft-Karp. `adjacency[u]` lists the right neighbours of left vertex u.
/// Vertices and neighbour lists are scanned in ascending order, so the
/// returned matching (not only its size) is a deterministic function of the
/// input.
BipartiteMatching hopcroft_karp(std::size_t right_count,
                                const std::vector<std::vector<std::uint32_t>>& adjacency);

/// Maximum set of edges with pairwise distinct start nodes and pairwise
/// distinct end nodes. Out-copies of nodes form the left side, in-copies the
/// right side; a self-loop (v, v) matches out-copy v with in-copy v.
std::vector<Edge> maximum_matching(const DirectedGraph& g);

std::size_t matching_number(const DirectedGraph& g);

/// Maximum rank over all numerical realizations of the pattern, computed as a
/// maximum rows-versus-columns bipartite matching.
std::size_t structural_rank(const SparsityPattern& p);

}  // namespace netcx
