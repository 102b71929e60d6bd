#ifndef HLGAP_BRIDGE_HPP
#define HLGAP_BRIDGE_HPP

#include <span>
#include <string>
#include <vector>

#include "hlgap/graph.hpp"

namespace hlgap {

/// Bipartite connector between G_A (rows) and G_B (columns).
///
/// Columns use G_B's own vertex numbering; only the columns listed in the
/// bridge set may carry edges. The column constraint is reported by
/// satisfies_column_constraint() rather than enforced here, so that
/// violating instances can still be inspected.
class BridgeMatrix {
 public:
  /// H = diag(da) * htilde * diag(db).
  static BridgeMatrix from_voltage(Blockd htilde, const Vectord& da,
                                   const Vectord& db,
                                   std::vector<Index> bridge_set);

  /// Arbitrary real weights; htilde becomes the nonzero pattern of h.
  static BridgeMatrix from_weights(Blockd h, std::vector<Index> bridge_set);

  const Blockd& h() const { return h_; }
  const Blockd& htilde() const { return htilde_; }
  /// 0-based G_B vertices, in the order given at construction.
  const std::vector<Index>& bridge_set() const { return bridge_set_; }
  Index k_b() const { return static_cast<Index>(bridge_set_.size()); }
  Index rows() const { return h_.rows(); }
  Index cols() const { return h_.cols(); }

  /// True iff every column outside the bridge set is zero.
  bool satisfies_column_constraint() const;

  /// htilde with its columns moved so the bridge set occupies 0..k_B-1.
  Blockd canonical_htilde() const;

 private:
  BridgeMatrix(Blockd h, Blockd htilde, std::vector<Index> bridge_set);

  Blockd h_;
  Blockd htilde_;
  std::vector<Index> bridge_set_;
};

/// G_A, G_B and the connector, assembled as [[A, H], [H^T, B]].
struct BridgedGraph {
  WeightedGraph graph;
  WeightedGraph a;
  WeightedGraph b;
  BridgeMatrix bridge;

  const SymMatrixd& c() const { return graph.adjacency(); }
};

/// [[0, H], [H^T, 0]].
SymMatrixd bipartite_adjacency(const Blockd& h);

/// True iff columns k_b.. of htilde are zero.
bool check_column_constraint(const Blockd& htilde, Index k_b);

/// Permutation of 0..m-1 sending the bridge set (in order) to the front and
/// the remaining vertices, ascending, behind it. pi[v] is the new position.
std::vector<Index> front_permutation(Index m, std::span<const Index> bridge_set);

/// Throws ColumnConstraintViolated or NotBridgeable (G_B's inverse is not
/// null on the bridge set).
BridgedGraph build_bridged(const WeightedGraph& ga, const WeightedGraph& gb,
                           const BridgeMatrix& bm);

/// ||H B^{-1} H^T||_max <= 1e-10 * max(1, ||H||_max^2 * ||B^{-1}||_max).
bool verify_null_quadratic(const WeightedGraph& gb, const BridgeMatrix& bm);

/// C^{-1} from A^{-1} and B^{-1} alone, using S = A.
SymMatrixd bridged_inverse(const WeightedGraph& ga, const WeightedGraph& gb,
                           const BridgeMatrix& bm);

/// "b -> a(w), a(w); b -> (empty)" with 1-based vertices, one clause per
/// bridge-set vertex of G_B.
std::string describe_bridge(const BridgeMatrix& bm);

/// Shortest decimal that round-trips, e.g. "4", "0.5".
std::string format_weight(double w);

}  // namespace hlgap

#endif  // HLGAP_BRIDGE_HPP
