#include "hlgap/bridge.hpp"

#include <charconv>
#include <sstream>

namespace hlgap {

namespace {

void check_bridge_set(Index m, const std::vector<Index>& bridge_set) {
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (Index v : bridge_set) {
    if (v < 0 || v >= m) {
      std::ostringstream os;
      os << "bridge-set vertex " << v + 1 << " outside G_B (m = " << m << ")";
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    if (seen[static_cast<std::size_t>(v)]) {
      std::ostringstream os;
      os << "bridge-set vertex " << v + 1 << " listed twice";
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

SymMatrixd inverse_or_zero_eigenvalue(const WeightedGraph& g) {
  try {
    return invert(g.adjacency());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::ZeroEigenvalue,
                std::string("graph is not invertible: ") + e.what());
  }
}

void check_conforming(const WeightedGraph& ga, const WeightedGraph& gb,
                      const BridgeMatrix& bm) {
  if (bm.rows() != ga.size() || bm.cols() != gb.size()) {
    std::ostringstream os;
    os << "bridge is " << bm.rows() << "x" << bm.cols() << " but graphs have "
       << ga.size() << " and " << gb.size() << " vertices";
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

}  // namespace

BridgeMatrix::BridgeMatrix(Blockd h, Blockd htilde,
                           std::vector<Index> bridge_set)
    : h_(std::move(h)),
      htilde_(std::move(htilde)),
      bridge_set_(std::move(bridge_set)) {
  check_bridge_set(h_.cols(), bridge_set_);
}

BridgeMatrix BridgeMatrix::from_voltage(Blockd htilde, const Vectord& da,
                                        const Vectord& db,
                                        std::vector<Index> bridge_set) {
  if (da.size() != htilde.rows() || db.size() != htilde.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "voltage diagonals do not match the bridge dimensions");
  }
  for (Index i = 0; i < htilde.rows(); ++i) {
    for (Index j = 0; j < htilde.cols(); ++j) {
      if (htilde(i, j) != 0.0 && htilde(i, j) != 1.0) {
        std::ostringstream os;
        os << "bridge entry (" << i + 1 << "," << j + 1 << ") is "
           << htilde(i, j);
        throw Error(ErrorCode::NonBinaryInput, os.str());
      }
    }
  }
  Blockd h = da.asDiagonal() * htilde * db.asDiagonal();
  return BridgeMatrix(std::move(h), std::move(htilde), std::move(bridge_set));
}

BridgeMatrix BridgeMatrix::from_weights(Blockd h,
                                        std::vector<Index> bridge_set) {
  Blockd pattern = (h.array() != 0.0).cast<double>().matrix();
  return BridgeMatrix(std::move(h), std::move(pattern), std::move(bridge_set));
}

bool BridgeMatrix::satisfies_column_constraint() const {
  std::vector<bool> allowed(static_cast<std::size_t>(cols()), false);
  for (Index v : bridge_set_) allowed[static_cast<std::size_t>(v)] = true;
  for (Index j = 0; j < cols(); ++j)
    if (!allowed[static_cast<std::size_t>(j)] && !htilde_.col(j).isZero(0.0))
      return false;
  return true;
}

Blockd BridgeMatrix::canonical_htilde() const {
  const auto pi = front_permutation(cols(), bridge_set_);
  Blockd out(rows(), cols());
  for (Index j = 0; j < cols(); ++j)
    out.col(pi[static_cast<std::size_t>(j)]) = htilde_.col(j);
  return out;
}

SymMatrixd bipartite_adjacency(const Blockd& h) {
  const Index n = h.rows();
  const Index m = h.cols();
  Blockd c = Blockd::Zero(n + m, n + m);
  c.topRightCorner(n, m) = h;
  c.bottomLeftCorner(m, n) = h.transpose();
  return SymMatrixd(std::move(c));
}

bool check_column_constraint(const Blockd& htilde, Index k_b) {
  if (k_b < 0 || k_b > htilde.cols())
    throw Error(ErrorCode::DimensionMismatch, "k_B outside 0..m");
  return htilde.rightCols(htilde.cols() - k_b).isZero(0.0);
}

std::vector<Index> front_permutation(Index m,
                                     std::span<const Index> bridge_set) {
  std::vector<Index> pi(static_cast<std::size_t>(m), -1);
  Index next = 0;
  for (Index v : bridge_set) pi[static_cast<std::size_t>(v)] = next++;
  for (Index v = 0; v < m; ++v)
    if (pi[static_cast<std::size_t>(v)] < 0) pi[static_cast<std::size_t>(v)] = next++;
  return pi;
}

BridgedGraph build_bridged(const WeightedGraph& ga, const WeightedGraph& gb,
                           const BridgeMatrix& bm) {
  check_conforming(ga, gb, bm);
  if (!bm.satisfies_column_constraint()) {
    throw Error(ErrorCode::ColumnConstraintViolated,
                "bridge uses a G_B vertex outside the bridge set");
  }
  if (!is_arbitrarily_bridgeable(gb, bm.bridge_set())) {
    throw Error(ErrorCode::NotBridgeable,
                "G_B's inverse is not null on the bridge set");
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(ga.size() + gb.size()));
  for (const auto& l : ga.labels()) labels.push_back("A:" + l);
  for (const auto& l : gb.labels()) labels.push_back("B:" + l);
  WeightedGraph c(assemble(ga.adjacency(), gb.adjacency(), bm.h()),
                  std::move(labels));
  return {std::move(c), ga, gb, bm};
}

bool verify_null_quadratic(const WeightedGraph& gb, const BridgeMatrix& bm) {
  if (bm.cols() != gb.size())
    throw Error(ErrorCode::DimensionMismatch, "bridge columns differ from G_B size");
  const auto b_inv = inverse_or_zero_eigenvalue(gb);
  const Blockd q = bm.h() * b_inv.dense() * bm.h().transpose();
  const double h_max = max_abs(bm.h());
  const double scale = std::max(1.0, h_max * h_max * b_inv.max_abs());
  return max_abs(q) <= 1e-10 * scale;
}

SymMatrixd bridged_inverse(const WeightedGraph& ga, const WeightedGraph& gb,
                           const BridgeMatrix& bm) {
  check_conforming(ga, gb, bm);
  if (!bm.satisfies_column_constraint()) {
    throw Error(ErrorCode::ColumnConstraintViolated,
                "bridge uses a G_B vertex outside the bridge set");
  }
  if (!is_arbitrarily_bridgeable(gb, bm.bridge_set())) {
    throw Error(ErrorCode::NotBridgeable,
                "G_B's inverse is not null on the bridge set");
  }
  const Index n = ga.size();
  const Index m = gb.size();
  const auto a_inv = inverse_or_zero_eigenvalue(ga);
  const auto b_inv = inverse_or_zero_eigenvalue(gb);
  const Blockd h_binv = bm.h() * b_inv.dense();
  const Blockd k = a_inv.dense() * h_binv;  // A^{-1} H B^{-1}

  Blockd out(n + m, n + m);
  out.topLeftCorner(n, n) = a_inv.dense();
  out.topRightCorner(n, m) = -k;
  out.bottomLeftCorner(m, n) = -k.transpose();
  out.bottomRightCorner(m, m) =
      SymMatrixd::symmetrized(b_inv.dense() + h_binv.transpose() * k).dense();
  return SymMatrixd(std::move(out));
}

std::string format_weight(double w) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, res.ptr);
}

std::string describe_bridge(const BridgeMatrix& bm) {
  std::ostringstream os;
  bool first_clause = true;
  for (Index b : bm.bridge_set()) {
    if (!first_clause) os << "; ";
    first_clause = false;
    os << b + 1 << " → ";
    bool any = false;
    for (Index a = 0; a < bm.rows(); ++a) {
      if (bm.htilde()(a, b) == 0.0) continue;
      if (any) os << ", ";
      os << a + 1 << "(" << format_weight(bm.h()(a, b)) << ")";
      any = true;
    }
    if (!any) os << "∅";
  }
  return os.str();
}

}  // namespace hlgap
