#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "netcx/graph.hpp"

namespace netcx {

enum class GraphModel { barabasi_albert, watts_strogatz };

/// How undirected model edges become directed edges.
///   bidirected: {u, v} -> (u, v) and (v, u)
///   forward:    one edge in generation order; BA points from the newcomer to
///               its target, WS from the lattice node u to its (possibly
///               rewired) partner.
enum class Orientation { bidirected, forward };

std::string to_string(GraphModel m);
std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& name);
/// Accepts "ba"/"barabasi_albert" and "ws"/"watts_strogatz".
GraphModel parse_graph_model(const std::string& name);

struct GeneratorSpec {
  GraphModel model = GraphModel::barabasi_albert;
  std::size_t n = 0;
  std::size_t m = 1;            // BA attachment count, 1 <= m < n
  std::size_t ring_degree = 4;  // WS lattice degree, even, 2 <= ring_degree < n
  double p = 0.0;               // WS rewiring probability
  Orientation orientation = Orientation::bidirected;
  std::uint64_t seed = 0;

  /// Throws InputError when the parameters violate the model constraints.
  void validate() const;
};

/// Barabasi-Albert or Watts-Strogatz graph, directed per `spec.orientation`.
/// Deterministic in the spec (seed included).
DirectedGraph generate(const GeneratorSpec& spec);

/// Same node count and edge count, edges placed uniformly at random among
/// ordered pairs (u, v), u != v, without duplicates. Weights are dropped;
/// labels are kept.
DirectedGraph rewire_uniform(const DirectedGraph& g, std::uint64_t seed);

/// Each node lands in one of k blocks, uniformly among all assignments that
/// leave no block empty.
NodePartition random_partition(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace netcx
