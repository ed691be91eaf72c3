#include "netcx/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_set>
#include <vector>

#include "netcx/error.hpp"
#include "netcx/random.hpp"

namespace netcx {
namespace {

using UndirectedEdge = std::pair<NodeId, NodeId>;

// `edges` lists (tail, head) in the model's generation order.
DirectedGraph orient(std::size_t n, const std::vector<UndirectedEdge>& edges, Orientation o) {
  std::vector<Edge> out;
  out.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    out.push_back({u, v});
    if (o == Orientation::bidirected) out.push_back({v, u});
  }
  return DirectedGraph(n, std::move(out));
}

DirectedGraph barabasi_albert(const GeneratorSpec& s) {
  Rng rng(s.seed);
  std::vector<UndirectedEdge> edges;
  std::vector<std::size_t> degree(s.n, 0);
  for (NodeId u = 0; u < s.m; ++u) {
    for (NodeId v = u + 1; v < s.m; ++v) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  std::vector<bool> chosen(s.n, false);
  std::vector<NodeId> targets;
  for (NodeId t = static_cast<NodeId>(s.m); t < s.n; ++t) {
    targets.clear();
    // Degree-proportional draws without replacement among nodes 0..t-1.
    for (std::size_t draw = 0; draw < s.m; ++draw) {
      std::size_t total = 0;
      std::size_t free_nodes = 0;
      for (NodeId v = 0; v < t; ++v) {
        if (!chosen[v]) {
          total += degree[v];
          ++free_nodes;
        }
      }
      NodeId pick = 0;
      if (total == 0) {
        std::uniform_int_distribution<std::size_t> u(0, free_nodes - 1);
        std::size_t r = u(rng);
        for (NodeId v = 0; v < t; ++v) {
          if (chosen[v]) continue;
          if (r-- == 0) {
            pick = v;
            break;
          }
        }
      } else {
        std::uniform_int_distribution<std::size_t> u(0, total - 1);
        std::size_t r = u(rng);
        for (NodeId v = 0; v < t; ++v) {
          if (chosen[v]) continue;
          if (r < degree[v]) {
            pick = v;
            break;
          }
          r -= degree[v];
        }
      }
      chosen[pick] = true;
      targets.push_back(pick);
    }
    for (NodeId v : targets) {
      chosen[v] = false;
      edges.emplace_back(t, v);
      ++degree[v];
      ++degree[t];
    }
  }
  return orient(s.n, edges, s.orientation);
}

DirectedGraph watts_strogatz(const GeneratorSpec& s) {
  Rng rng(s.seed);
  const std::size_t n = s.n;
  const std::size_t half = s.ring_degree / 2;
  std::vector<std::set<NodeId>> adj(n);
  std::set<UndirectedEdge> arcs;  // (tail, head) in generation orientation
  auto link = [&](NodeId u, NodeId v) {
    adj[u].insert(v);
    adj[v].insert(u);
    arcs.emplace(u, v);
  };
  auto unlink = [&](NodeId u, NodeId v) {
    adj[u].erase(v);
    adj[v].erase(u);
    arcs.erase({u, v});
    arcs.erase({v, u});
  };
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= half; ++j) link(u, static_cast<NodeId>((u + j) % n));
  }
  std::bernoulli_distribution coin(s.p);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  // Lattice edges (u, u+j) are visited ring by ring; a rewired edge keeps u and
  // moves its far end to a uniformly chosen node that is neither u nor a
  // current neighbour of u.
  for (std::size_t j = 1; j <= half; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const auto v = static_cast<NodeId>((u + j) % n);
      if (!coin(rng)) continue;
      if (!adj[u].contains(v)) continue;  // already moved away by an earlier rewiring
      if (adj[u].size() >= n - 1) continue;
      NodeId w;
      do {
        w = pick(rng);
      } while (w == u || adj[u].contains(w));
      unlink(u, v);
      link(u, w);
    }
  }
  return orient(n, {arcs.begin(), arcs.end()}, s.orientation);
}

}  // namespace

std::string to_string(GraphModel m) {
  return m == GraphModel::barabasi_albert ? "ba" : "ws";
}

std::string to_string(Orientation o) {
  return o == Orientation::bidirected ? "bidirected" : "forward";
}

Orientation parse_orientation(const std::string& name) {
  if (name == "bidirected") return Orientation::bidirected;
  if (name == "forward") return Orientation::forward;
  throw InputError("unknown orientation '" + name + "' (expected bidirected or forward)");
}

GraphModel parse_graph_model(const std::string& name) {
  if (name == "ba" || name == "barabasi_albert") return GraphModel::barabasi_albert;
  if (name == "ws" || name == "watts_strogatz") return GraphModel::watts_strogatz;
  throw InputError("unknown graph model '" + name + "' (expected ba or ws)");
}

void GeneratorSpec::validate() const {
  if (model == GraphModel::barabasi_albert) {
    if (m < 1 || m >= n) {
      throw InputError("Barabasi-Albert needs 1 <= m < n (m=" + std::to_string(m) +
                       ", n=" + std::to_string(n) + ")");
    }
  } else {
    if (ring_degree % 2 != 0 || ring_degree < 2 || ring_degree >= n) {
      throw InputError("Watts-Strogatz needs an even ring degree with 2 <= ring_degree < n");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("rewiring probability must lie in [0, 1]");
  }
  if (n > std::numeric_limits<NodeId>::max()) throw InputError("node count too large");
}

DirectedGraph generate(const GeneratorSpec& spec) {
  spec.validate();
  return spec.model == GraphModel::barabasi_albert ? barabasi_albert(spec)
                                                   : watts_strogatz(spec);
}

DirectedGraph rewire_uniform(const DirectedGraph& g, std::uint64_t seed) {
  const std::uint64_t n = g.node_count();
  const std::uint64_t slots = n < 2 ? 0 : n * (n - 1);
  const std::uint64_t m = g.edge_count();
  if (m > slots) {
    throw InputError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                     " nodes without self-loops or duplicates");
  }
  // Floyd's sampling of m distinct slots; slot s encodes (u, v) with v != u.
  Rng rng(seed);
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(m);
  std::vector<std::uint64_t> order;
  order.reserve(m);
  for (std::uint64_t j = slots - m; j < slots; ++j) {
    std::uniform_int_distribution<std::uint64_t> u(0, j);
    const std::uint64_t t = u(rng);
    const std::uint64_t s = picked.insert(t).second ? t : j;
    if (s == j) picked.insert(j);
    order.push_back(s);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t s : order) {
    const auto u = static_cast<NodeId>(s / (n - 1));
    const auto r = static_cast<NodeId>(s % (n - 1));
    edges.push_back({u, r < u ? r : r + 1});
  }
  DirectedGraph out(n, std::move(edges));
  out.set_labels({g.labels().begin(), g.labels().end()});
  return out;
}

NodePartition random_partition(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 1 || k > n) {
    throw InputError("random_partition needs 1 <= k <= n (k=" + std::to_string(k) +
                     ", n=" + std::to_string(n) + ")");
  }
  // Sequential sampler for a uniform surjection onto k blocks. With r nodes
  // left and e blocks still empty, log_ways[r][e] is the log of the number of
  // completions (relative to k^r). A node opens a new block with probability
  // proportional to e * ways(r-1, e-1) and reuses one otherwise.
  const double kd = static_cast<double>(k);
  const double ninf = -std::numeric_limits<double>::infinity();
  auto log_add = [](double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
  };
  std::vector<std::vector<double>> log_ways(n + 1, std::vector<double>(k + 1, ninf));
  log_ways[0][0] = 0.0;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t e = 0; e <= k; ++e) {
      double v = ninf;
      if (e < k && log_ways[r - 1][e] != ninf) {
        v = std::log(static_cast<double>(k - e) / kd) + log_ways[r - 1][e];
      }
      if (e > 0 && log_ways[r - 1][e - 1] != ninf) {
        v = log_add(v, std::log(static_cast<double>(e) / kd) + log_ways[r - 1][e - 1]);
      }
      log_ways[r][e] = v;
    }
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::uint32_t> empty_blocks(k);
  for (std::uint32_t b = 0; b < k; ++b) empty_blocks[b] = b;
  std::vector<std::uint32_t> used;
  std::vector<std::uint32_t> block_of(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = n - v;
    const std::size_t e = empty_blocks.size();
    double p_new = 0.0;
    if (e > 0) {
      p_new = std::exp(std::log(static_cast<double>(e) / kd) + log_ways[r - 1][e - 1] -
                       log_ways[r][e]);
    }
    const bool open = e > 0 && (e == r || used.empty() || unit(rng) < p_new);
    if (open) {
      std::uniform_int_distribution<std::size_t> u(0, e - 1);
      const std::size_t i = u(rng);
      block_of[v] = empty_blocks[i];
      used.push_back(empty_blocks[i]);
      empty_blocks.erase(empty_blocks.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      std::uniform_int_distribution<std::size_t> u(0, used.size() - 1);
      block_of[v] = used[u(rng)];
    }
  }
  return NodePartition(k, std::move(block_of));
}

}  // namespace netcx
