#ifndef HLGAP_IO_HPP
#define HLGAP_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hlgap/optimizer.hpp"

namespace hlgap {

using Json = nlohmann::ordered_json;

// Graph JSON:
//   {"n": 6, "labels": ["C1", ...], "edges": [[1, 2, 1.0], ...], "loops": [[1, 0.5]]}
// 1-based vertices, i < j, finite nonzero weights, no duplicates. labels and
// loops are optional. Violations throw ParseError.
WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& g);
WeightedGraph parse_graph(std::string_view text);

/// "builtin:NAME" or a path to a graph JSON file. Missing files throw
/// IoError.
WeightedGraph load_graph(const std::string& ref);

// Bridge JSON:
//   {"k_B": 2, "bridge_set": [1, 2], "edges": [[a_vertex, b_vertex], ...]}
// edges list the 1-entries of Htilde, 1-based.
struct BridgeFile {
  std::vector<Index> bridge_set;            // 0-based
  std::vector<std::pair<Index, Index>> edges;  // 0-based (G_A row, G_B column)
};

BridgeFile bridge_file_from_json(const Json& j);
Json bridge_file_to_json(const BridgeFile& f);
BridgeFile load_bridge_file(const std::string& path);

/// n x m pattern for the edges listed in f; throws ParseError for vertices
/// out of range.
Blockd bridge_pattern(const BridgeFile& f, Index n, Index m);

/// Graphviz "graph" with one node per vertex and one edge per nonzero entry
/// of the upper triangle (loops included), weights at 6 significant digits.
std::string to_dot(const WeightedGraph& g, std::string_view name = "G");

Json certificate_to_json(const GapCertificate& cert);

/// Fixed 6-decimal rendering used by all text output.
std::string fixed6(double value);

Json search_result_to_json(const BridgeSearchSpec& spec,
                           const SearchResult& result);

std::string read_file(const std::string& path);

}  // namespace hlgap

#endif  // HLGAP_IO_HPP
