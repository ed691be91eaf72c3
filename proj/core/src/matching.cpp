#include "netcx/matching.hpp"

#include <limits>

namespace netcx {
namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Layered BFS/DFS state for Hopcroft-Karp. Left vertices are 0..L-1; the DFS
// is iterative so deep augmenting paths cannot overflow the stack.
class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t right_count, const std::vector<std::vector<std::uint32_t>>& adj)
      : adj_(adj),
        mate_left_(adj.size(), kUnmatched),
        mate_right_(right_count, kUnmatched),
        dist_(adj.size(), kInf),
        next_(adj.size(), 0) {}

  BipartiteMatching run() {
    std::size_t size = 0;
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::uint32_t u = 0; u < adj_.size(); ++u) {
        if (mate_left_[u] == kUnmatched && dfs(u)) ++size;
      }
    }
    return {size, std::move(mate_left_), std::move(mate_right_)};
  }

 private:
  bool bfs() {
    std::vector<std::uint32_t> queue;
    queue.reserve(adj_.size());
    for (std::uint32_t u = 0; u < adj_.size(); ++u) {
      if (mate_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t v : adj_[u]) {
        const std::uint32_t w = mate_right_[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t root) {
    // path holds left vertices; next_[u] is the arc currently explored from u.
    std::vector<std::uint32_t> path{root};
    while (!path.empty()) {
      const std::uint32_t u = path.back();
      if (next_[u] == adj_[u].size()) {
        dist_[u] = kInf;
        path.pop_back();
        if (!path.empty()) ++next_[path.back()];
        continue;
      }
      const std::uint32_t v = adj_[u][next_[u]];
      const std::uint32_t w = mate_right_[v];
      if (w == kUnmatched) {
        for (std::uint32_t x : path) {
          const std::uint32_t y = adj_[x][next_[x]];
          mate_left_[x] = y;
          mate_right_[y] = x;
        }
        return true;
      }
      if (dist_[w] == dist_[u] + 1) {
        path.push_back(w);
      } else {
        ++next_[u];
      }
    }
    return false;
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> next_;
};

}  // namespace

BipartiteMatching hopcroft_karp(std::size_t right_count,
                                const std::vector<std::vector<std::uint32_t>>& adjacency) {
  return HopcroftKarp(right_count, adjacency).run();
}

std::vector<Edge> maximum_matching(const DirectedGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.node_count());
  for (const Edge& e : g.edges()) adj[e.src].push_back(e.dst);  // edges are sorted
  const auto m = hopcroft_karp(g.node_count(), adj);
  std::vector<Edge> out;
  out.reserve(m.size);
  for (std::uint32_t u = 0; u < m.mate_left.size(); ++u) {
    if (m.mate_left[u] != kUnmatched) out.push_back({u, m.mate_left[u]});
  }
  return out;
}

std::size_t matching_number(const DirectedGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.node_count());
  for (const Edge& e : g.edges()) adj[e.src].push_back(e.dst);
  return hopcroft_karp(g.node_count(), adj).size;
}

std::size_t structural_rank(const SparsityPattern& p) {
  std::vector<std::vector<std::uint32_t>> adj(p.rows());
  for (const auto& e : p.nonzeros()) adj[e.row].push_back(static_cast<std::uint32_t>(e.col));
  return hopcroft_karp(p.cols(), adj).size;
}

}  // namespace netcx
