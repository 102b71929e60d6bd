#ifndef HLGAP_OPTIMIZER_HPP
#define HLGAP_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hlgap/sdp_gap.hpp"

namespace hlgap {

/// One instance of the gap-maximizing bridge problem.
struct BridgeSearchSpec {
  WeightedGraph ga;
  WeightedGraph gb;
  VoltageDecomposition va;
  VoltageDecomposition vb;
  std::vector<Index> bridge_set;  // 0-based G_B vertices, ascending
  std::optional<int> max_degree;
  bool require_bridge = true;

  Index n() const { return ga.size(); }
  Index m() const { return gb.size(); }
  Index k_b() const { return static_cast<Index>(bridge_set.size()); }
  /// Number of binary unknowns, n * k_B.
  int bits() const { return static_cast<int>(n() * k_b()); }
};

/// Validates the instance and recovers both voltage diagonals. Throws
/// SpecInvalid when a graph is singular, G_B is not arbitrarily bridgeable
/// over bridge_set, a graph is not a voltage graph, or n * k_B exceeds 62.
BridgeSearchSpec make_search_spec(WeightedGraph ga, WeightedGraph gb,
                                  std::vector<Index> bridge_set,
                                  std::optional<int> max_degree = std::nullopt,
                                  bool require_bridge = true,
                                  double tol = 1e-9);

/// Row-major bit string of the n x k_B bridge pattern, entry (0, 0) being the
/// most significant bit. Ascending encodings are ascending bit strings.
using Encoding = std::uint64_t;

/// n x m pattern in G_B numbering.
Blockd decode(const BridgeSearchSpec& spec, Encoding code);
Encoding encode(const BridgeSearchSpec& spec, const Blockd& htilde);

struct EnumerationStats {
  std::uint64_t emitted = 0;
  std::uint64_t pruned = 0;  // leaves never reached; emitted + pruned = 2^bits
};

/// Depth-first walk over the bits in row-major order, 0-branch first, so
/// encodings come out ascending. With prune set, subtrees whose partial
/// assignment already breaks the degree cap are skipped, as is the empty
/// bridge when one is required, and exactly the feasible patterns are
/// emitted. Without pruning every one of the 2^bits patterns is emitted.
EnumerationStats enumerate(const BridgeSearchSpec& spec,
                           const std::function<void(Encoding)>& visit,
                           bool prune = true);

/// Gap of the bridged graph for a pattern, or nullopt if the pattern breaks
/// the column, degree or nonempty constraint.
std::optional<double> evaluate(const BridgeSearchSpec& spec,
                               const Blockd& htilde);

struct SearchOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool prune = true;
  std::ostream* audit = nullptr;  // CSV: encoding,htilde,feasible,gap
};

struct SearchResult {
  double best_gap = 0.0;
  Encoding best_encoding = 0;
  BridgeMatrix best_bridge;
  GapCertificate certificate;
  bool relaxation_tight = false;
  std::uint64_t candidates_evaluated = 0;
  std::uint64_t candidates_pruned = 0;
  std::uint64_t feasible_count = 0;
  std::uint64_t optima_count = 0;  // candidates tied with the optimum
  std::string bridging_description;

  const Blockd& best_htilde() const { return best_bridge.htilde(); }
  const Blockd& best_h() const { return best_bridge.h(); }
};

/// Gaps within this relative distance of the maximum count as optimal.
inline constexpr double kTieTolerance = 1e-10;

/// Exhaustive search. Gaps are computed in parallel; best_gap is their exact
/// maximum and the reported bridge is the smallest encoding whose gap lies
/// within the tie tolerance of it, so nothing depends on the thread count.
/// Throws NoFeasibleCandidate.
SearchResult optimize(const BridgeSearchSpec& spec,
                      const SearchOptions& options = {});

/// Table-style text for the optimum, e.g. "1 → ∅; 2 → 2(1)".
std::string describe_bridging(const SearchResult& result);

}  // namespace hlgap

#endif  // HLGAP_OPTIMIZER_HPP
