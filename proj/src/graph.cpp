#include "hlgap/graph.hpp"

#include <cmath>
#include <queue>
#include <sstream>

namespace hlgap {

WeightedGraph::WeightedGraph(SymMatrixd adjacency,
                             std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
  const auto n = static_cast<std::size_t>(adjacency_.size());
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    std::ostringstream os;
    os << "graph has " << n << " vertices but " << labels_.size()
       << " labels";
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

WeightedGraph from_voltage(const SymMatrixd& binary, const Vectord& d) {
  const Index n = binary.size();
  if (d.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "voltage diagonal length differs from graph size");
  }
  for (Index i = 0; i < n; ++i) {
    if (d(i) == 0.0) {
      std::ostringstream os;
      os << "voltage diagonal entry " << i + 1 << " is zero";
      throw Error(ErrorCode::ZeroDiagonal, os.str());
    }
    for (Index j = 0; j < n; ++j) {
      if (binary(i, j) != 0.0 && binary(i, j) != 1.0) {
        std::ostringstream os;
        os << "binary adjacency entry (" << i + 1 << "," << j + 1
           << ") is " << binary(i, j);
        throw Error(ErrorCode::NonBinaryInput, os.str());
      }
    }
  }
  return WeightedGraph(SymMatrixd::symmetrized(
      d.asDiagonal() * binary.dense() * d.asDiagonal()));
}

SymMatrixd binary_pattern(const WeightedGraph& g) {
  return SymMatrixd(
      (g.adjacency().dense().array() != 0.0).cast<double>().matrix());
}

namespace {

struct Component {
  std::vector<Index> order;   // BFS order, root first
  std::vector<Index> parent;  // indexed by vertex, -1 for the root
  std::vector<int> parity;    // +1 / -1 exponent of the root value
};

bool within(double value, double target, double tol) {
  return std::abs(value - target) <= tol * std::max(1.0, std::abs(target));
}

}  // namespace

VoltageDecomposition recover_voltage(const WeightedGraph& g, double tol) {
  const Index n = g.size();
  const auto& a = g.adjacency();
  Vectord d = Vectord::Ones(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Index> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> parity(static_cast<std::size_t>(n), 1);

  for (Index root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;

    std::vector<Index> order;
    std::queue<Index> frontier;
    frontier.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    while (!frontier.empty()) {
      const Index u = frontier.front();
      frontier.pop();
      order.push_back(u);
      for (Index v = 0; v < n; ++v) {
        if (v == u || a(u, v) == 0.0 || seen[static_cast<std::size_t>(v)])
          continue;
        seen[static_cast<std::size_t>(v)] = true;
        parent[static_cast<std::size_t>(v)] = u;
        parity[static_cast<std::size_t>(v)] =
            -parity[static_cast<std::size_t>(u)];
        frontier.push(v);
      }
    }

    auto propagate = [&](double root_value) {
      d(root) = root_value;
      for (std::size_t k = 1; k < order.size(); ++k) {
        const Index v = order[k];
        const Index p = parent[static_cast<std::size_t>(v)];
        d(v) = a(p, v) / d(p);
      }
    };
    auto consistent = [&] {
      for (Index u : order)
        for (Index v : order)
          if (v >= u && a(u, v) != 0.0 && !within(d(u) * d(v), a(u, v), tol))
            return false;
      return true;
    };

    propagate(1.0);
    if (consistent()) continue;

    // The unit anchor failed; a loop or an odd cycle may still pin the scale.
    // With root value x, D_v = x^{parity_v} * d_v(x = 1).
    double root_value = 0.0;
    for (Index u : order) {
      for (Index v : order) {
        if (v < u || a(u, v) == 0.0) continue;
        const int su = parity[static_cast<std::size_t>(u)];
        // tree edges always join opposite parities
        if (su != parity[static_cast<std::size_t>(v)]) continue;
        const double ratio = a(u, v) / (d(u) * d(v));
        if (ratio <= 0.0) {
          std::ostringstream os;
          os << "edge (" << u + 1 << "," << v + 1
             << ") has a sign no voltage diagonal can produce";
          throw Error(ErrorCode::NotVoltageGraph, os.str());
        }
        root_value = su > 0 ? std::sqrt(ratio) : 1.0 / std::sqrt(ratio);
        break;
      }
      if (root_value != 0.0) break;
    }
    if (root_value != 0.0) {
      propagate(root_value);
      if (consistent()) continue;
    }
    std::ostringstream os;
    os << "no voltage diagonal reproduces the weights of the component "
          "containing vertex "
       << root + 1;
    throw Error(ErrorCode::NotVoltageGraph, os.str());
  }
  return {binary_pattern(g), d};
}

Vectord spectrum(const WeightedGraph& g) { return eigenvalues(g.adjacency()); }

GapEdges gap_edges(const WeightedGraph& g) {
  const Vectord values = spectrum(g);
  const double tau = zero_threshold(g.adjacency());
  bool have_plus = false;
  bool have_minus = false;
  GapEdges edges{0.0, 0.0};
  for (Index k = 0; k < values.size(); ++k) {
    const double lambda = values(k);
    if (std::abs(lambda) <= tau) {
      std::ostringstream os;
      os << "graph is not invertible: eigenvalue " << lambda;
      throw Error(ErrorCode::ZeroEigenvalue, os.str());
    }
    // values are descending, so the last positive / first negative win
    if (lambda > 0) {
      edges.lambda_plus = lambda;
      have_plus = true;
    } else if (!have_minus) {
      edges.lambda_minus = lambda;
      have_minus = true;
    }
  }
  if (!have_plus)
    throw Error(ErrorCode::NoPositiveEigenvalue, "spectrum has no positive eigenvalue");
  if (!have_minus)
    throw Error(ErrorCode::NoNegativeEigenvalue, "spectrum has no negative eigenvalue");
  return edges;
}

double spectral_gap(const WeightedGraph& g) { return gap_edges(g).gap(); }

HomoLumo homo_lumo(const WeightedGraph& g) {
  const Vectord values = spectrum(g);
  const Index n = values.size();
  // 1-based k; even n: HOMO = k, LUMO = k+1; odd n: both k
  const Index k = n % 2 == 0 ? n / 2 : (n + 1) / 2;
  const double homo = values(k - 1);
  const double lumo = n % 2 == 0 ? values(k) : values(k - 1);
  return {homo, lumo, homo > 0.0 && 0.0 > lumo};
}

Vectord huckel_energies(const WeightedGraph& g, double alpha, double beta) {
  return (alpha + beta * spectrum(g).array()).matrix();
}

bool is_arbitrarily_bridgeable(const WeightedGraph& g,
                               std::span<const Index> vertices, double tol) {
  SymMatrixd inverse = SymMatrixd::identity(1);
  try {
    inverse = invert(g.adjacency());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::ZeroEigenvalue,
                std::string("graph is not invertible: ") + e.what());
  }
  for (Index i : vertices) {
    for (Index j : vertices) {
      if (i < 0 || i >= g.size() || j < 0 || j >= g.size())
        throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
      if (std::abs(inverse(i, j)) > tol) return false;
    }
  }
  return true;
}

WeightedGraph permute(const WeightedGraph& g, std::span<const Index> pi) {
  const Index n = g.size();
  if (static_cast<Index>(pi.size()) != n)
    throw Error(ErrorCode::NotAPermutation, "permutation length differs from graph size");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Index target : pi) {
    if (target < 0 || target >= n || hit[static_cast<std::size_t>(target)])
      throw Error(ErrorCode::NotAPermutation, "not a bijection on the vertex set");
    hit[static_cast<std::size_t>(target)] = true;
  }
  Blockd out(n, n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Index pi_i = pi[static_cast<std::size_t>(i)];
    labels[static_cast<std::size_t>(pi_i)] = g.labels()[static_cast<std::size_t>(i)];
    for (Index j = 0; j < n; ++j)
      out(pi_i, pi[static_cast<std::size_t>(j)]) = g.adjacency()(i, j);
  }
  return WeightedGraph(SymMatrixd(std::move(out)), std::move(labels));
}

std::vector<int> binary_degrees(const WeightedGraph& g) {
  const Index n = g.size();
  std::vector<int> degrees(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) ++degrees[static_cast<std::size_t>(i)];
  return degrees;
}

}  // namespace hlgap
