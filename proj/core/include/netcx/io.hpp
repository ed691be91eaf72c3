#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "netcx/complexity.hpp"
#include "netcx/dynamics.hpp"
#include "netcx/graph.hpp"

namespace netcx {

struct EdgeListOptions {
  /// Reject files without an `n=<count>` header line.
  bool require_header = false;
};

/// Edge list: one `src,dst[,weight]` edge per line, comma- or tab-separated.
/// Blank lines and lines starting with `#` are skipped. Node IDs are arbitrary
/// strings mapped to indices in order of first appearance; the mapping is kept
/// as graph labels. An optional first line `n=<count>` fixes the node count,
/// in which case IDs must be the integers 0..count-1. Either every edge has a
/// weight or none does. Errors carry the 1-based line number.
DirectedGraph read_edge_list(std::istream& in, const EdgeListOptions& opts = {});
DirectedGraph parse_edge_list(const std::filesystem::path& path, const EdgeListOptions& opts = {});

/// Writes `n=<count>` followed by index-based edges (weights included when
/// present). Labels, if any, are listed as `# node <index> <label>` comments.
void write_edge_list(std::ostream& out, const DirectedGraph& g);

/// Groups file: one `node_id,group_label` or `node_id,gamma_value` line per
/// node of `g`. All rows must be of one kind: numeric values are taken as
/// gammas (grouped by equality, or within `gamma_merge_tolerance`), anything
/// else as labels. Every node must appear exactly once.
DynamicsAssignment read_groups(std::istream& in, const DirectedGraph& g,
                               double gamma_merge_tolerance = 0.0);
DynamicsAssignment parse_groups(const std::filesystem::path& path, const DirectedGraph& g,
                                double gamma_merge_tolerance = 0.0);

/// Decimal string with exactly four fractional digits.
std::string format_ratio(double x);

/// Single structured document (JSON object, trailing newline).
std::string to_json(const ComplexityReport& r);

/// One-line JSON error document, e.g. {"error":{"kind":"input","message":"..."}}.
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace netcx
