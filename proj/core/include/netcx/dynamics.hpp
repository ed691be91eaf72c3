#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcx/graph.hpp"

namespace netcx {

/// Local pole of every node and the partition of nodes into groups of
/// identical dynamics.
///
/// Blocks are numbered by first appearance in node order, so node 0 is always
/// in block 0. When poles are known, `node_poles()[v]` equals the
/// representative pole of v's block.
class DynamicsAssignment {
 public:
  /// Groups nodes by bitwise-equal gamma. With `merge_tolerance > 0`, values
  /// are merged by single linkage (sorted neighbours closer than the
  /// tolerance share a block) and each block takes the gamma of its
  /// lowest-index node as representative.
  static DynamicsAssignment from_gammas(std::vector<double> gamma, double merge_tolerance = 0.0);

  /// Groups nodes by identical label; no poles are attached.
  static DynamicsAssignment from_labels(std::span<const std::string> labels);

  /// Wraps an existing partition. `block_poles`, when given, must have one
  /// pairwise-distinct finite entry per block.
  static DynamicsAssignment from_partition(NodePartition p,
                                           std::optional<std::vector<double>> block_poles = {});

  const NodePartition& partition() const noexcept { return partition_; }
  std::size_t node_count() const noexcept { return partition_.node_count(); }
  std::size_t block_count() const noexcept { return partition_.block_count(); }

  /// Human-readable name of each block (group label or formatted gamma).
  std::span<const std::string> block_labels() const noexcept { return block_labels_; }

  bool has_poles() const noexcept { return block_poles_.has_value(); }
  std::span<const double> block_poles() const;
  std::vector<double> node_poles() const;

  /// Copy with representative poles attached (one per block, distinct).
  DynamicsAssignment with_poles(std::vector<double> block_poles) const;

 private:
  NodePartition partition_;
  std::vector<std::string> block_labels_;
  std::optional<std::vector<double>> block_poles_;
};

}  // namespace netcx
