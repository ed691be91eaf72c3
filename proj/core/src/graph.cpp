#include "netcx/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netcx/error.hpp"

namespace netcx {
namespace {

void check_endpoints(std::size_t n, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw InputError("edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                       ") out of range for " + std::to_string(n) + " nodes");
    }
  }
}

void check_sorted_unique(std::span<const Edge> edges) {
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->src) + "," +
                     std::to_string(dup->dst) + ")");
  }
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  check_endpoints(n_, edges_);
  std::sort(edges_.begin(), edges_.end());
  check_sorted_unique(edges_);
}

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Edge> edges, std::vector<double> weights)
    : n_(n) {
  if (weights.size() != edges.size()) {
    throw InputError("weight count does not match edge count");
  }
  check_endpoints(n, edges);
  for (double w : weights) {
    if (!std::isfinite(w) || w == 0.0) {
      throw InputError("edge weights must be finite and nonzero");
    }
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  edges_.reserve(edges.size());
  std::vector<double> sorted_weights;
  sorted_weights.reserve(edges.size());
  for (std::size_t i : order) {
    edges_.push_back(edges[i]);
    sorted_weights.push_back(weights[i]);
  }
  check_sorted_unique(edges_);
  weights_ = std::move(sorted_weights);
}

std::span<const double> DirectedGraph::weights() const noexcept {
  if (!weights_) return {};
  return *weights_;
}

bool DirectedGraph::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string DirectedGraph::label(NodeId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

void DirectedGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw InputError("label count does not match node count");
  }
  labels_ = std::move(labels);
}

DirectedGraph DirectedGraph::with_weights(std::vector<double> weights) const {
  DirectedGraph out(n_, edges_, std::move(weights));
  out.labels_ = labels_;
  return out;
}

DirectedGraph DirectedGraph::without_weights() const {
  DirectedGraph out = *this;
  out.weights_.reset();
  return out;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
}

NodePartition::NodePartition(std::size_t k, std::vector<std::uint32_t> block_of)
    : k_(k), block_of_(std::move(block_of)) {
  std::vector<bool> seen(k_, false);
  for (std::uint32_t b : block_of_) {
    if (b >= k_) {
      throw InputError("block index " + std::to_string(b) + " out of range for k=" +
                       std::to_string(k_));
    }
    seen[b] = true;
  }
  for (std::size_t b = 0; b < k_; ++b) {
    if (!seen[b]) throw InputError("partition block " + std::to_string(b) + " is empty");
  }
}

NodePartition NodePartition::single_block(std::size_t n) {
  return NodePartition(n == 0 ? 0 : 1, std::vector<std::uint32_t>(n, 0));
}

NodePartition NodePartition::singletons(std::size_t n) {
  std::vector<std::uint32_t> b(n);
  std::iota(b.begin(), b.end(), std::uint32_t{0});
  return NodePartition(n, std::move(b));
}

std::vector<std::size_t> NodePartition::block_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (std::uint32_t b : block_of_) ++sizes[b];
  return sizes;
}

SparsityPattern::SparsityPattern(std::size_t rows, std::size_t cols, std::vector<Entry> nonzeros)
    : rows_(rows), cols_(cols), nonzeros_(std::move(nonzeros)) {
  for (const Entry& e : nonzeros_) {
    if (e.row >= rows_ || e.col >= cols_) throw InputError("pattern entry out of bounds");
  }
  std::sort(nonzeros_.begin(), nonzeros_.end());
  if (std::adjacent_find(nonzeros_.begin(), nonzeros_.end()) != nonzeros_.end()) {
    throw InputError("duplicate pattern entry");
  }
}

SparsityPattern SparsityPattern::of_adjacency(const DirectedGraph& g) {
  std::vector<Entry> nz;
  nz.reserve(g.edge_count());
  for (const Edge& e : g.edges()) nz.push_back({e.dst, e.src});
  return SparsityPattern(g.node_count(), g.node_count(), std::move(nz));
}

SparsityPattern SparsityPattern::transposed() const {
  std::vector<Entry> nz;
  nz.reserve(nonzeros_.size());
  for (const Entry& e : nonzeros_) nz.push_back({e.col, e.row});
  return SparsityPattern(cols_, rows_, std::move(nz));
}

Degrees degrees(const DirectedGraph& g) {
  Degrees d{std::vector<std::size_t>(g.node_count(), 0),
            std::vector<std::size_t>(g.node_count(), 0)};
  for (const Edge& e : g.edges()) {
    ++d.out[e.src];
    ++d.in[e.dst];
  }
  return d;
}

std::vector<NodeId> sinks(const DirectedGraph& g) {
  const auto d = degrees(g);
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (d.out[v] == 0) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

std::vector<NodeId> sources(const DirectedGraph& g) {
  const auto d = degrees(g);
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (d.in[v] == 0) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

std::vector<DirectedGraph> edge_cut(const DirectedGraph& g, const NodePartition& p,
                                    CutDirection direction) {
  if (p.node_count() != g.node_count()) {
    throw InputError("partition covers " + std::to_string(p.node_count()) +
                     " nodes but graph has " + std::to_string(g.node_count()));
  }
  const std::size_t k = p.block_count();
  std::vector<std::vector<Edge>> edges(k);
  std::vector<std::vector<double>> weights(k);
  const auto w = g.weights();
  const auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const NodeId owner = direction == CutDirection::outgoing ? all[i].src : all[i].dst;
    const auto b = p.block_of(owner);
    edges[b].push_back(all[i]);
    if (g.has_weights()) weights[b].push_back(w[i]);
  }
  std::vector<DirectedGraph> out;
  out.reserve(k);
  for (std::size_t b = 0; b < k; ++b) {
    if (g.has_weights()) {
      out.emplace_back(g.node_count(), std::move(edges[b]), std::move(weights[b]));
    } else {
      out.emplace_back(g.node_count(), std::move(edges[b]));
    }
  }
  return out;
}

}  // namespace netcx
