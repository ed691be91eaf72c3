#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netcx {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph on nodes 0..n-1.
///
/// An edge (src, dst) contributes the entry a_{dst,src} of the interconnection
/// matrix A, i.e. column `src` of A carries the edges leaving `src`. Edges are
/// stored sorted by (src, dst). Weights are either absent for every edge (a
/// structured graph whose nonzeros are free parameters) or present, finite and
/// nonzero for every edge. Self-loops are allowed.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Throws InputError on out-of-range endpoints or duplicate edges.
  DirectedGraph(std::size_t n, std::vector<Edge> edges);

  /// Weighted constructor; `weights[i]` belongs to `edges[i]`.
  DirectedGraph(std::size_t n, std::vector<Edge> edges, std::vector<double> weights);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_weights() const noexcept { return weights_.has_value(); }
  /// Parallel to edges(); empty span for structured graphs.
  std::span<const double> weights() const noexcept;

  bool contains(Edge e) const;

  /// External node identifiers (index -> label). Empty when the graph was
  /// built from indices directly; label(v) then returns the decimal index.
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::string label(NodeId v) const;
  void set_labels(std::vector<std::string> labels);

  /// Same pattern with new weights, aligned with edges().
  DirectedGraph with_weights(std::vector<double> weights) const;
  DirectedGraph without_weights() const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> weights_;
  std::vector<std::string> labels_;
};

/// Assignment of every node to one of k non-empty blocks.
class NodePartition {
 public:
  NodePartition() = default;
  /// Throws InputError if a block index is >= k or some block is empty.
  NodePartition(std::size_t k, std::vector<std::uint32_t> block_of);

  static NodePartition single_block(std::size_t n);
  static NodePartition singletons(std::size_t n);

  std::size_t block_count() const noexcept { return k_; }
  std::size_t node_count() const noexcept { return block_of_.size(); }
  std::uint32_t block_of(NodeId v) const { return block_of_.at(v); }
  std::span<const std::uint32_t> assignment() const noexcept { return block_of_; }
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const NodePartition&, const NodePartition&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<std::uint32_t> block_of_;
};

/// Zero/free pattern of a rows x cols matrix.
class SparsityPattern {
 public:
  struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  SparsityPattern(std::size_t rows, std::size_t cols, std::vector<Entry> nonzeros);

  /// Pattern of the interconnection matrix A: entry (dst, src) per edge.
  static SparsityPattern of_adjacency(const DirectedGraph& g);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Entry> nonzeros() const noexcept { return nonzeros_; }
  SparsityPattern transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> nonzeros_;
};

struct Degrees {
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
};

Degrees degrees(const DirectedGraph& g);

/// Nodes with out-degree zero, ascending. Isolated nodes are sinks.
std::vector<NodeId> sinks(const DirectedGraph& g);
std::vector<NodeId> sources(const DirectedGraph& g);

enum class CutDirection { outgoing, ingoing };

/// Edge-cut of `g` induced by `p`: subgraph i keeps the edges leaving
/// (outgoing) or entering (ingoing) block i. Every subgraph lives on the full
/// node set and the subgraph edge sets partition the edges of `g`.
std::vector<DirectedGraph> edge_cut(const DirectedGraph& g, const NodePartition& p,
                                    CutDirection direction);

}  // namespace netcx
