#include <cmath>
#include <string>
#include <utility>

#include "hlgap/graph.hpp"

namespace hlgap {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// 1-based edge lists, read off the printed adjacency matrices
const EdgeList kBenzeneEdges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}};
const EdgeList kFulveneEdges = {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {4, 6}};

SymMatrixd binary_from_edges(int n, const EdgeList& edges) {
  Blockd a = Blockd::Zero(n, n);
  for (auto [i, j] : edges) {
    a(i - 1, j - 1) = 1.0;
    a(j - 1, i - 1) = 1.0;
  }
  return SymMatrixd(std::move(a));
}

std::vector<std::string> carbon_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("C" + std::to_string(i));
  return labels;
}

WeightedGraph relabel(const WeightedGraph& g, std::vector<std::string> labels) {
  return WeightedGraph(g.adjacency(), std::move(labels));
}

WeightedGraph pyridine() {
  // N at vertex 1: h_N = 0.5, k_CN = 0.8
  constexpr double h_n = 0.5;
  constexpr double k_cn = 0.8;
  SymMatrixd pattern = [] {
    Blockd a = binary_from_edges(6, kBenzeneEdges).dense();
    a(0, 0) = 1.0;
    return SymMatrixd(std::move(a));
  }();
  Vectord d(6);
  d << std::sqrt(h_n), k_cn / std::sqrt(h_n), 1.0, 1.0, 1.0,
      k_cn / std::sqrt(h_n);
  std::vector<std::string> labels = {"N1", "C2", "C3", "C4", "C5", "C6"};
  return relabel(from_voltage(pattern, d), std::move(labels));
}

}  // namespace

Vectord fulvene_weighted_voltage() {
  Vectord d(6);
  d << 1.0, 1.0, 2.0, 0.5, 2.0, 4.0;
  return d;
}

Vectord benzene_weighted_voltage() {
  Vectord d(6);
  d << 1.0, 1.0, 2.0, 1.0, 1.0, 2.0;
  return d;
}

std::vector<std::string> builtin_names() {
  return {"benzene", "fulvene",  "pyridine", "fulvene-weighted",
          "benzene-weighted", "F0", "F0bar", "B0", "B0bar"};
}

WeightedGraph builtin_graph(std::string_view name) {
  if (name == "benzene" || name == "B0bar")
    return WeightedGraph(binary_from_edges(6, kBenzeneEdges), carbon_labels(6));
  if (name == "fulvene" || name == "F0bar")
    return WeightedGraph(binary_from_edges(6, kFulveneEdges), carbon_labels(6));
  if (name == "pyridine") return pyridine();
  if (name == "fulvene-weighted" || name == "F0")
    return relabel(from_voltage(binary_from_edges(6, kFulveneEdges),
                                fulvene_weighted_voltage()),
                   carbon_labels(6));
  if (name == "benzene-weighted" || name == "B0")
    return relabel(from_voltage(binary_from_edges(6, kBenzeneEdges),
                                benzene_weighted_voltage()),
                   carbon_labels(6));
  throw Error(ErrorCode::ParseError,
              "unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace hlgap
