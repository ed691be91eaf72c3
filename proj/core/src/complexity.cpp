#include "netcx/complexity.hpp"

#include <algorithm>
#include <cmath>

#include "netcx/error.hpp"
#include "netcx/matching.hpp"

namespace netcx {
namespace {

void require_same_nodes(const DirectedGraph& g, const DynamicsAssignment& d) {
  if (g.node_count() != d.node_count()) {
    throw InputError("dynamics cover " + std::to_string(d.node_count()) +
                     " nodes but graph has " + std::to_string(g.node_count()));
  }
}

// (M - cI) / r with c the mean diagonal entry and r the infinity norm of the
// shifted matrix. The rank of [C; CM; ...; CM^(n-1)] is invariant under
// affine maps of M, while the powers of the shifted and scaled matrix stay
// bounded.
DenseMatrix rescaled_state(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return m;
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
  const double shift = trace / static_cast<double>(n);
  DenseMatrix out = m - shift * DenseMatrix::identity(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(out(i, j));
    norm = std::max(norm, row);
  }
  return norm > 0.0 ? (1.0 / norm) * out : out;
}

}  // namespace

DenseMatrix interconnection_matrix(const DirectedGraph& g) {
  if (!g.has_weights()) throw InputError("graph has no edge weights");
  DenseMatrix a(g.node_count(), g.node_count());
  const auto w = g.weights();
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) a(edges[i].dst, edges[i].src) = w[i];
  return a;
}

std::vector<Residue> residues(const DirectedGraph& g, const DynamicsAssignment& d,
                              ResidueMode mode) {
  require_same_nodes(g, d);
  if (mode == ResidueMode::numeric && !g.has_weights()) {
    throw InputError("numeric residues require edge weights");
  }
  const bool numeric = mode == ResidueMode::numeric ||
                       (mode == ResidueMode::automatic && g.has_weights());
  const std::size_t n = g.node_count();
  const std::size_t k = d.block_count();
  const auto& p = d.partition();
  std::vector<std::vector<SparsityPattern::Entry>> nz(k);
  std::vector<DenseMatrix> values;
  if (numeric) values.assign(k, DenseMatrix(n, n));
  const auto edges = g.edges();
  const auto w = g.weights();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto b = p.block_of(edges[i].src);
    nz[b].push_back({edges[i].dst, edges[i].src});
    if (numeric) values[b](edges[i].dst, edges[i].src) = w[i];
  }
  const auto poles = d.block_poles();
  std::vector<Residue> out;
  out.reserve(k);
  for (std::size_t b = 0; b < k; ++b) {
    Residue r;
    r.block = b;
    if (!poles.empty()) r.pole = poles[b];
    r.pattern = SparsityPattern(n, n, std::move(nz[b]));
    if (numeric) r.values = std::move(values[b]);
    out.push_back(std::move(r));
  }
  return out;
}

Bounds bounds(const DirectedGraph& g) {
  return {matching_number(g), g.node_count() - sinks(g).size()};
}

std::size_t min_inputs(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0;
  return std::max<std::size_t>(1, n - matching_number(g));
}

std::size_t structural_index(const DirectedGraph& g, const NodePartition& p) {
  std::size_t phi = 0;
  for (const auto& sub : edge_cut(g, p, CutDirection::outgoing)) phi += matching_number(sub);
  return phi;
}

ComplexityReport structural_complexity(const DirectedGraph& g, const DynamicsAssignment& d) {
  require_same_nodes(g, d);
  ComplexityReport r;
  r.n = g.node_count();
  r.edge_count = g.edge_count();
  r.block_count = d.block_count();
  const auto cut = edge_cut(g.without_weights(), d.partition(), CutDirection::outgoing);
  const auto sizes = d.partition().block_sizes();
  const auto labels = d.block_labels();
  for (std::size_t b = 0; b < cut.size(); ++b) {
    BlockComplexity bc;
    bc.block = b;
    bc.label = labels[b];
    bc.size = sizes[b];
    bc.edges = cut[b].edge_count();
    bc.matching_number = matching_number(cut[b]);
    r.phi_structural += bc.matching_number;
    r.per_block.push_back(std::move(bc));
  }
  r.bounds = bounds(g);
  r.n_min = min_inputs(g);
  return r;
}

std::size_t numerical_complexity(const DirectedGraph& g, const DynamicsAssignment& d,
                                 std::optional<double> tol) {
  std::size_t phi = 0;
  for (const auto& r : residues(g, d, ResidueMode::numeric)) phi += numerical_rank(*r.values, tol);
  return phi;
}

OracleValues mcmillan_oracle(const DirectedGraph& g, const DynamicsAssignment& d,
                             std::optional<double> tol) {
  require_same_nodes(g, d);
  const DenseMatrix a = interconnection_matrix(g);
  const auto gammas = d.node_poles();
  const DenseMatrix gamma = DenseMatrix::diagonal(gammas);
  if (!a.all_finite() || !gamma.all_finite()) throw InputError("non-finite system matrices");
  OracleValues out;
  out.from_q = numerical_rank(observability_stack(a, rescaled_state(gamma)), tol);
  out.from_wbar = numerical_rank(observability_stack(a, rescaled_state(gamma + a)), tol);
  return out;
}

DirectedGraph sample_weights(const DirectedGraph& g, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> w(g.edge_count());
  for (double& x : w) {
    do {
      x = normal(rng);
    } while (x == 0.0);
  }
  return g.with_weights(std::move(w));
}

std::vector<double> sample_block_poles(std::size_t k, Rng& rng, double min_gap) {
  const double span = kPoleHigh - kPoleLow;
  if (!(min_gap >= 0.0) || !std::isfinite(min_gap)) throw InputError("pole gap must be finite and non-negative");
  const double reserved = min_gap * static_cast<double>(k == 0 ? 0 : k - 1);
  if (reserved > span) {
    throw InputError("cannot place " + std::to_string(k) + " poles with gap " +
                     std::to_string(min_gap) + " in [" + std::to_string(kPoleLow) + ", " +
                     std::to_string(kPoleHigh) + "]");
  }
  // Uniform points on the shortened interval, sorted, then spread by i*gap:
  // exactly uniform over the gap-constrained configurations.
  std::uniform_real_distribution<double> u(0.0, span - reserved);
  std::vector<double> poles(k);
  for (double& p : poles) p = u(rng);
  std::sort(poles.begin(), poles.end());
  for (std::size_t i = 0; i < k; ++i) poles[i] = kPoleLow + poles[i] + min_gap * static_cast<double>(i);
  std::shuffle(poles.begin(), poles.end(), rng);
  return poles;
}

double feasible_pole_gap(std::size_t k) {
  if (k <= 1) return kPoleMinGap;
  return std::min(kPoleMinGap, 0.5 * (kPoleHigh - kPoleLow) / static_cast<double>(k - 1));
}

GenericityResult genericity_check(const DirectedGraph& g, const DynamicsAssignment& d,
                                  std::size_t trials, std::uint64_t seed,
                                  std::optional<double> tol) {
  if (trials == 0) throw InputError("genericity_check needs at least one trial");
  GenericityResult res;
  res.trials = trials;
  res.seed = seed;
  res.phi_structural = structural_index(g, d.partition());
  res.phi_min = SIZE_MAX;
  const DirectedGraph pattern = g.without_weights();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, {stream::weights, t}));
    const std::size_t phi = numerical_complexity(sample_weights(pattern, rng), d, tol);
    if (phi == res.phi_structural) ++res.matches;
    res.phi_min = std::min(res.phi_min, phi);
    res.phi_max = std::max(res.phi_max, phi);
  }
  return res;
}

}  // namespace netcx
