#ifndef HLGAP_GRAPH_HPP
#define HLGAP_GRAPH_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlgap/matrix_kernel.hpp"

namespace hlgap {

/// Undirected vertex-labelled graph with real edge weights. A zero adjacency
/// entry means "no edge"; diagonal entries are loops (heteroatom terms).
class WeightedGraph {
 public:
  /// Labels default to "1".."n".
  explicit WeightedGraph(SymMatrixd adjacency,
                         std::vector<std::string> labels = {});

  Index size() const { return adjacency_.size(); }
  const SymMatrixd& adjacency() const { return adjacency_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_edge(Index i, Index j) const { return adjacency_(i, j) != 0.0; }

 private:
  SymMatrixd adjacency_;
  std::vector<std::string> labels_;
};

/// A = diag(d) * binary * diag(d).
struct VoltageDecomposition {
  SymMatrixd binary;
  Vectord d;
};

struct HomoLumo {
  double lambda_homo;
  double lambda_lumo;
  bool closed_shell;  // lambda_homo > 0 > lambda_lumo
};

/// Smallest positive and largest negative eigenvalue.
struct GapEdges {
  double lambda_plus;
  double lambda_minus;
  double gap() const { return lambda_plus - lambda_minus; }
};

WeightedGraph from_voltage(const SymMatrixd& binary, const Vectord& d);

/// Finds D with A = D * binary * D. The gauge is fixed per connected
/// component: the lowest-numbered vertex gets a positive D, and its magnitude
/// is 1 unless a loop or an odd cycle pins the scale.
VoltageDecomposition recover_voltage(const WeightedGraph& g, double tol = 1e-9);

/// Eigenvalues of the adjacency matrix, descending.
Vectord spectrum(const WeightedGraph& g);

GapEdges gap_edges(const WeightedGraph& g);

/// lambda_plus - lambda_minus. Throws ZeroEigenvalue for non-invertible
/// graphs, NoPositiveEigenvalue / NoNegativeEigenvalue otherwise.
double spectral_gap(const WeightedGraph& g);

/// HOMO index k = n/2 (n even) or (n+1)/2 (n odd), counted 1-based on the
/// descending spectrum; LUMO is k+1 for even n and k itself for odd n.
HomoLumo homo_lumo(const WeightedGraph& g);

/// E_k = alpha + beta * lambda_k.
Vectord huckel_energies(const WeightedGraph& g, double alpha, double beta);

/// True iff the principal block of A^{-1} on `vertices` (0-based) vanishes.
bool is_arbitrarily_bridgeable(const WeightedGraph& g,
                               std::span<const Index> vertices,
                               double tol = 1e-9);

/// Vertex i of g becomes vertex pi[i] of the result.
WeightedGraph permute(const WeightedGraph& g, std::span<const Index> pi);

/// Off-diagonal nonzero count per row; loops are not counted.
std::vector<int> binary_degrees(const WeightedGraph& g);

/// Nonzero pattern of the adjacency, loops included.
SymMatrixd binary_pattern(const WeightedGraph& g);

// Builtin molecules.

/// Names accepted by builtin_graph, canonical names first.
std::vector<std::string> builtin_names();

/// benzene, fulvene, pyridine, fulvene-weighted, benzene-weighted, and the
/// aliases F0 / F0bar / B0 / B0bar. Throws ParseError for unknown names.
WeightedGraph builtin_graph(std::string_view name);

/// Voltage diagonals of the weighted builtins (F0 and B0).
Vectord fulvene_weighted_voltage();
Vectord benzene_weighted_voltage();

}  // namespace hlgap

#endif  // HLGAP_GRAPH_HPP
