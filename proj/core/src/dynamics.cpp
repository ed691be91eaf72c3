#include "netcx/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "netcx/error.hpp"

namespace netcx {
namespace {

std::string format_gamma(double g) {
  std::ostringstream os;
  os.precision(17);
  os << g;
  return os.str();
}

void check_distinct_finite(std::span<const double> poles) {
  for (double p : poles) {
    if (!std::isfinite(p)) throw InputError("block poles must be finite");
  }
  std::vector<double> sorted(poles.begin(), poles.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("block poles must be pairwise distinct");
  }
}

// Renumbers raw group ids so blocks appear in node order.
std::vector<std::uint32_t> canonical_blocks(std::span<const std::size_t> raw, std::size_t& k,
                                            std::vector<std::size_t>& first_node) {
  std::unordered_map<std::size_t, std::uint32_t> remap;
  std::vector<std::uint32_t> out(raw.size());
  first_node.clear();
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto [it, inserted] = remap.try_emplace(raw[v], static_cast<std::uint32_t>(remap.size()));
    if (inserted) first_node.push_back(v);
    out[v] = it->second;
  }
  k = remap.size();
  return out;
}

}  // namespace

DynamicsAssignment DynamicsAssignment::from_gammas(std::vector<double> gamma,
                                                   double merge_tolerance) {
  if (!(merge_tolerance >= 0.0) || !std::isfinite(merge_tolerance)) {
    throw InputError("gamma merge tolerance must be finite and non-negative");
  }
  for (double g : gamma) {
    if (!std::isfinite(g)) throw InputError("gamma values must be finite");
  }
  const std::size_t n = gamma.size();
  std::vector<std::size_t> raw(n);
  if (merge_tolerance == 0.0) {
    // +0.0 and -0.0 compare equal but are distinct bit patterns; treat them as
    // one value.
    for (std::size_t v = 0; v < n; ++v) {
      raw[v] = std::bit_cast<std::uint64_t>(gamma[v] == 0.0 ? 0.0 : gamma[v]);
    }
  } else {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return gamma[a] < gamma[b]; });
    std::size_t cluster = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && gamma[order[i]] - gamma[order[i - 1]] > merge_tolerance) ++cluster;
      raw[order[i]] = cluster;
    }
  }
  DynamicsAssignment d;
  std::size_t k = 0;
  std::vector<std::size_t> first;
  auto blocks = canonical_blocks(raw, k, first);
  d.partition_ = NodePartition(k, std::move(blocks));
  std::vector<double> poles;
  for (std::size_t v : first) {
    poles.push_back(gamma[v] == 0.0 ? 0.0 : gamma[v]);
    d.block_labels_.push_back(format_gamma(poles.back()));
  }
  d.block_poles_ = std::move(poles);
  return d;
}

DynamicsAssignment DynamicsAssignment::from_labels(std::span<const std::string> labels) {
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::size_t> raw(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    raw[v] = ids.try_emplace(labels[v], ids.size()).first->second;
  }
  DynamicsAssignment d;
  std::size_t k = 0;
  std::vector<std::size_t> first;
  auto blocks = canonical_blocks(raw, k, first);
  d.partition_ = NodePartition(k, std::move(blocks));
  for (std::size_t v : first) d.block_labels_.push_back(labels[v]);
  return d;
}

DynamicsAssignment DynamicsAssignment::from_partition(NodePartition p,
                                                      std::optional<std::vector<double>> poles) {
  DynamicsAssignment d;
  d.partition_ = std::move(p);
  for (std::size_t b = 0; b < d.partition_.block_count(); ++b) {
    d.block_labels_.push_back("block" + std::to_string(b));
  }
  if (poles) d = d.with_poles(std::move(*poles));
  return d;
}

std::span<const double> DynamicsAssignment::block_poles() const {
  if (!block_poles_) return {};
  return *block_poles_;
}

std::vector<double> DynamicsAssignment::node_poles() const {
  if (!block_poles_) throw InputError("dynamics assignment carries no pole values");
  std::vector<double> out(node_count());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = (*block_poles_)[partition_.block_of(static_cast<NodeId>(v))];
  }
  return out;
}

DynamicsAssignment DynamicsAssignment::with_poles(std::vector<double> poles) const {
  if (poles.size() != block_count()) {
    throw InputError("expected " + std::to_string(block_count()) + " block poles, got " +
                     std::to_string(poles.size()));
  }
  check_distinct_finite(poles);
  DynamicsAssignment d = *this;
  d.block_poles_ = std::move(poles);
  return d;
}

}  // namespace netcx
