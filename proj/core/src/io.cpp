#include "netcx/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "netcx/error.hpp"

namespace netcx {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Splits on commas, or on tabs when the line has no comma.
std::vector<std::string_view> split_fields(std::string_view line) {
  const char sep = line.find(',') != std::string_view::npos ? ',' : '\t';
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

DirectedGraph read_edge_list(std::istream& in, const EdgeListOptions& opts) {
  std::optional<std::size_t> declared_n;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::optional<bool> weighted;
  bool seen_content = false;

  auto node = [&](std::string_view id, std::size_t line_no) -> NodeId {
    if (id.empty()) fail(line_no, "empty node id");
    if (declared_n) {
      const auto idx = parse_count(id);
      if (!idx || *idx >= *declared_n) {
        fail(line_no, "node id '" + std::string(id) + "' is not an index below n=" +
                          std::to_string(*declared_n));
      }
      return static_cast<NodeId>(*idx);
    }
    auto [it, inserted] = ids.try_emplace(std::string(id), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(id);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("n=")) {
      if (seen_content) fail(line_no, "the n=<count> header must precede all edges");
      const auto n = parse_count(trim(line.substr(2)));
      if (!n) fail(line_no, "malformed header '" + std::string(line) + "'");
      declared_n = *n;
      seen_content = true;
      continue;
    }
    seen_content = true;
    const auto f = split_fields(line);
    if (f.size() != 2 && f.size() != 3) {
      fail(line_no, "expected src,dst[,weight] but found " + std::to_string(f.size()) +
                        " field(s)");
    }
    const bool has_w = f.size() == 3;
    if (weighted && *weighted != has_w) fail(line_no, "either all edges carry weights or none");
    weighted = has_w;
    const NodeId src = node(f[0], line_no);
    const NodeId dst = node(f[1], line_no);
    if (has_w) {
      const auto w = parse_double(f[2]);
      if (!w || !std::isfinite(*w) || *w == 0.0) {
        fail(line_no, "weight '" + std::string(f[2]) + "' is not a finite nonzero number");
      }
      weights.push_back(*w);
    }
    edges.push_back({src, dst});
  }
  if (opts.require_header && !declared_n) throw InputError("missing n=<count> header");

  const std::size_t n = declared_n ? *declared_n : labels.size();
  // Duplicates are reported against the original line order.
  {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      const std::string a = declared_n ? std::to_string(dup->src) : labels[dup->src];
      const std::string b = declared_n ? std::to_string(dup->dst) : labels[dup->dst];
      throw InputError("duplicate edge (" + a + "," + b + ")");
    }
  }
  DirectedGraph g = weighted.value_or(false)
                        ? DirectedGraph(n, std::move(edges), std::move(weights))
                        : DirectedGraph(n, std::move(edges));
  if (!declared_n) g.set_labels(std::move(labels));
  return g;
}

DirectedGraph parse_edge_list(const std::filesystem::path& path, const EdgeListOptions& opts) {
  auto in = open_or_throw(path);
  return read_edge_list(in, opts);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (std::size_t v = 0; v < g.labels().size(); ++v) {
    out << "# node " << v << ' ' << g.labels()[v] << '\n';
  }
  out << "n=" << g.node_count() << '\n';
  const auto edges = g.edges();
  const auto w = g.weights();
  char buf[64];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << edges[i].src << ',' << edges[i].dst;
    if (g.has_weights()) {
      std::snprintf(buf, sizeof buf, "%.17g", w[i]);
      out << ',' << buf;
    }
    out << '\n';
  }
}

DynamicsAssignment read_groups(std::istream& in, const DirectedGraph& g,
                               double gamma_merge_tolerance) {
  const std::size_t n = g.node_count();
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < n; ++v) index.emplace(g.label(v), v);

  std::vector<std::optional<std::string>> value(n);
  std::vector<std::size_t> defined_at(n, 0);
  std::optional<bool> numeric;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto f = split_fields(line);
    if (f.size() != 2 || f[0].empty() || f[1].empty()) {
      fail(line_no, "expected node_id,group_label or node_id,gamma_value");
    }
    const auto it = index.find(std::string(f[0]));
    if (it == index.end()) fail(line_no, "unknown node '" + std::string(f[0]) + "'");
    const NodeId v = it->second;
    if (value[v]) {
      fail(line_no, "node '" + std::string(f[0]) + "' already assigned on line " +
                        std::to_string(defined_at[v]));
    }
    const auto d = parse_double(f[1]);
    const bool is_num = d && std::isfinite(*d);
    if (numeric && *numeric != is_num) {
      fail(line_no, "mixed label and gamma-value rows");
    }
    numeric = is_num;
    value[v] = std::string(f[1]);
    defined_at[v] = line_no;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (!value[v]) throw InputError("node '" + g.label(v) + "' missing from groups file");
  }
  if (numeric.value_or(false)) {
    std::vector<double> gamma(n);
    for (NodeId v = 0; v < n; ++v) gamma[v] = *parse_double(*value[v]);
    return DynamicsAssignment::from_gammas(std::move(gamma), gamma_merge_tolerance);
  }
  std::vector<std::string> labels(n);
  for (NodeId v = 0; v < n; ++v) labels[v] = *value[v];
  return DynamicsAssignment::from_labels(labels);
}

DynamicsAssignment parse_groups(const std::filesystem::path& path, const DirectedGraph& g,
                                double gamma_merge_tolerance) {
  auto in = open_or_throw(path);
  return read_groups(in, g, gamma_merge_tolerance);
}

std::string format_ratio(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string to_json(const ComplexityReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n"] = r.n;
  j["edges"] = r.edge_count;
  j["k"] = r.block_count;
  j["phi_structural"] = r.phi_structural;
  j["phi_over_n"] = format_ratio(r.normalized());
  ordered_json blocks = ordered_json::array();
  for (const auto& b : r.per_block) {
    blocks.push_back({{"block", b.block},
                      {"label", b.label},
                      {"size", b.size},
                      {"edges", b.edges},
                      {"matching_number", b.matching_number}});
  }
  j["per_block"] = std::move(blocks);
  j["bounds"] = {{"lower", r.bounds.lower}, {"upper", r.bounds.upper}};
  j["n_min"] = r.n_min;
  if (r.numerical) {
    const auto& num = *r.numerical;
    ordered_json nj;
    nj["phi"] = num.phi;
    if (num.oracle) {
      nj["oracle_q"] = num.oracle->from_q;
      nj["oracle_wbar"] = num.oracle->from_wbar;
    }
    nj["weight_seed"] = num.weight_seed ? ordered_json(*num.weight_seed) : ordered_json(nullptr);
    nj["pole_seed"] = num.pole_seed ? ordered_json(*num.pole_seed) : ordered_json(nullptr);
    nj["tolerance"] = num.tolerance ? ordered_json(*num.tolerance) : ordered_json("default");
    j["numerical"] = std::move(nj);
  }
  if (r.genericity) {
    const auto& g = *r.genericity;
    j["genericity"] = {{"trials", g.trials},
                       {"matches", g.matches},
                       {"fraction", g.fraction()},
                       {"phi_min", g.phi_min},
                       {"phi_max", g.phi_max},
                       {"seed", g.seed}};
  }
  return j.dump(2) + "\n";
}

std::string error_json(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j.dump();
}

}  // namespace netcx
