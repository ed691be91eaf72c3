#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netcx/dynamics.hpp"
#include "netcx/graph.hpp"
#include "netcx/numlin.hpp"
#include "netcx/random.hpp"

namespace netcx {

/// Interconnection matrix A with A(dst, src) = weight of edge (src, dst).
/// Throws InputError for structured (unweighted) graphs.
DenseMatrix interconnection_matrix(const DirectedGraph& g);

/// Residue of Q(s) = A (sI - Gamma)^{-1} at one block pole: the columns of A
/// that belong to the block, all other columns zeroed.
struct Residue {
  std::size_t block = 0;
  std::optional<double> pole;
  SparsityPattern pattern{0, 0, {}};
  std::optional<DenseMatrix> values;
};

enum class ResidueMode {
  automatic,   // numeric values iff the graph carries weights
  structured,  // patterns only
  numeric,     // values required; throws InputError without weights
};

/// One residue per block. Column sets are disjoint and the residues sum to A.
std::vector<Residue> residues(const DirectedGraph& g, const DynamicsAssignment& d,
                              ResidueMode mode = ResidueMode::automatic);

struct Bounds {
  std::size_t lower = 0;  // matching number of the whole graph
  std::size_t upper = 0;  // n minus the number of sinks
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

Bounds bounds(const DirectedGraph& g);

/// Minimum number of inputs for structural controllability with identical
/// nodal dynamics: max(1, n - matching number). Zero for the empty graph.
std::size_t min_inputs(const DirectedGraph& g);

/// Structural index only: sum of matching numbers over the outgoing
/// edge-cut induced by `p`.
std::size_t structural_index(const DirectedGraph& g, const NodePartition& p);

struct BlockComplexity {
  std::size_t block = 0;
  std::string label;
  std::size_t size = 0;             // nodes in the block
  std::size_t edges = 0;            // edges leaving the block
  std::size_t matching_number = 0;  // of the block's outgoing cut subgraph
};

struct OracleValues {
  std::size_t from_q = 0;     // minimal degree of A (sI - Gamma)^{-1}
  std::size_t from_wbar = 0;  // minimal degree of I + A (sI - Gamma - A)^{-1}
  friend bool operator==(const OracleValues&, const OracleValues&) = default;
};

struct NumericalResult {
  std::size_t phi = 0;
  std::optional<OracleValues> oracle;
  std::optional<std::uint64_t> weight_seed;  // set when weights were sampled
  std::optional<std::uint64_t> pole_seed;    // set when poles were sampled
  std::optional<double> tolerance;           // absent means the default threshold
};

struct GenericityResult {
  std::size_t trials = 0;
  std::size_t matches = 0;  // trials with numerical phi == structural phi
  std::size_t phi_structural = 0;
  std::size_t phi_min = 0;
  std::size_t phi_max = 0;
  std::uint64_t seed = 0;
  double fraction() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(matches) / static_cast<double>(trials);
  }
};

struct ComplexityReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::size_t block_count = 0;
  std::size_t phi_structural = 0;
  std::vector<BlockComplexity> per_block;
  Bounds bounds;
  std::size_t n_min = 0;
  std::optional<NumericalResult> numerical;
  std::optional<GenericityResult> genericity;

  double normalized() const noexcept {
    return n == 0 ? 0.0 : static_cast<double>(phi_structural) / static_cast<double>(n);
  }
};

/// Structural complexity index via matching numbers of the outgoing edge-cut,
/// with per-block breakdown, the partition-free bounds and N_min. Weights,
/// if any, are ignored.
ComplexityReport structural_complexity(const DirectedGraph& g, const DynamicsAssignment& d);

/// McMillan degree of the filtered transfer function for the graph's weights:
/// the sum over blocks of the numerical rank of each residue.
std::size_t numerical_complexity(const DirectedGraph& g, const DynamicsAssignment& d,
                                 std::optional<double> tol = std::nullopt);

/// Two realization-based McMillan degrees, each the rank of an observability
/// matrix of a controllable realization:
///   Q(s)    = A (sI - Gamma)^{-1}            realized by (Gamma, I, A)
///   Wbar(s) = I + A (sI - Gamma - A)^{-1}    realized by (Gamma + A, I, A, I)
/// Requires weights and poles. Poles with |gamma| <= 1 keep the Krylov powers
/// well scaled.
OracleValues mcmillan_oracle(const DirectedGraph& g, const DynamicsAssignment& d,
                             std::optional<double> tol = std::nullopt);

/// Standard-normal weights on the pattern of `g`.
DirectedGraph sample_weights(const DirectedGraph& g, Rng& rng);

inline constexpr double kPoleLow = -1.0;
inline constexpr double kPoleHigh = -0.1;
inline constexpr double kPoleMinGap = 0.05;

/// `k` poles uniform on [kPoleLow, kPoleHigh] conditioned on a pairwise gap
/// of at least min_gap, in random block order. Throws InputError when k
/// poles cannot fit.
std::vector<double> sample_block_poles(std::size_t k, Rng& rng, double min_gap = kPoleMinGap);

/// Largest gap, capped at kPoleMinGap, that still fits k poles.
double feasible_pole_gap(std::size_t k);


/// Monte Carlo check that the numerical index equals the structural one for
/// random weights. Trial t draws weights from derive_seed(seed, {weights, t}),
/// so the result does not depend on evaluation order.
GenericityResult genericity_check(const DirectedGraph& g, const DynamicsAssignment& d,
                                  std::size_t trials, std::uint64_t seed,
                                  std::optional<double> tol = std::nullopt);

}  // namespace netcx
