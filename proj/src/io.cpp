#include "hlgap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace hlgap {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

Index vertex_index(const Json& v, Index n, std::string_view where) {
  if (!v.is_number_integer()) parse_fail(std::string(where) + ": vertex must be an integer");
  const auto i = v.get<std::int64_t>();
  if (i < 1 || i > n) {
    std::ostringstream os;
    os << where << ": vertex " << i << " outside 1.." << n;
    parse_fail(os.str());
  }
  return static_cast<Index>(i - 1);
}

double weight_value(const Json& w, std::string_view where) {
  if (!w.is_number()) parse_fail(std::string(where) + ": weight must be a number");
  const double value = w.get<double>();
  if (!std::isfinite(value) || value == 0.0)
    parse_fail(std::string(where) + ": weight must be finite and nonzero");
  return value;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer() ||
      j["n"].get<std::int64_t>() < 1)
    parse_fail("graph JSON needs a positive integer \"n\"");
  const auto n = static_cast<Index>(j["n"].get<std::int64_t>());
  Blockd a = Blockd::Zero(n, n);

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (!l.is_array() || static_cast<Index>(l.size()) != n)
      parse_fail("\"labels\" must be an array of n strings");
    for (const auto& s : l) {
      if (!s.is_string()) parse_fail("\"labels\" must contain strings");
      labels.push_back(s.get<std::string>());
    }
  }

  if (!j.contains("edges") || !j["edges"].is_array())
    parse_fail("graph JSON needs an \"edges\" array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) parse_fail("edge must be [i, j, w]");
    const Index u = vertex_index(e[0], n, "edge");
    const Index v = vertex_index(e[1], n, "edge");
    if (u >= v) parse_fail("edge endpoints must satisfy i < j");
    if (a(u, v) != 0.0) {
      std::ostringstream os;
      os << "duplicate edge (" << u + 1 << "," << v + 1 << ")";
      parse_fail(os.str());
    }
    a(u, v) = a(v, u) = weight_value(e[2], "edge");
  }

  if (j.contains("loops")) {
    if (!j["loops"].is_array()) parse_fail("\"loops\" must be an array");
    for (const auto& l : j["loops"]) {
      if (!l.is_array() || l.size() != 2) parse_fail("loop must be [i, w]");
      const Index u = vertex_index(l[0], n, "loop");
      if (a(u, u) != 0.0) {
        std::ostringstream os;
        os << "duplicate loop at " << u + 1;
        parse_fail(os.str());
      }
      a(u, u) = weight_value(l[1], "loop");
    }
  }
  return WeightedGraph(SymMatrixd(std::move(a)), std::move(labels));
}

Json graph_to_json(const WeightedGraph& g) {
  const Index n = g.size();
  Json edges = Json::array();
  Json loops = Json::array();
  for (Index i = 0; i < n; ++i) {
    if (g.has_edge(i, i)) loops.push_back(Json::array({i + 1, g.adjacency()(i, i)}));
    for (Index j = i + 1; j < n; ++j)
      if (g.has_edge(i, j))
        edges.push_back(Json::array({i + 1, j + 1, g.adjacency()(i, j)}));
  }
  Json out;
  out["n"] = n;
  out["labels"] = g.labels();
  out["edges"] = std::move(edges);
  if (!loops.empty()) out["loops"] = std::move(loops);
  return out;
}

WeightedGraph parse_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

WeightedGraph load_graph(const std::string& ref) {
  constexpr std::string_view kPrefix = "builtin:";
  if (ref.starts_with(kPrefix)) return builtin_graph(ref.substr(kPrefix.size()));
  return parse_graph(read_file(ref));
}

BridgeFile bridge_file_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("bridge JSON must be an object");
  if (!j.contains("bridge_set") || !j["bridge_set"].is_array())
    parse_fail("bridge JSON needs a \"bridge_set\" array");
  if (!j.contains("k_B") || !j["k_B"].is_number_integer())
    parse_fail("bridge JSON needs an integer \"k_B\"");
  if (j["k_B"].get<std::int64_t>() !=
      static_cast<std::int64_t>(j["bridge_set"].size()))
    parse_fail("\"k_B\" differs from the size of \"bridge_set\"");

  BridgeFile f;
  for (const auto& v : j["bridge_set"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
      parse_fail("bridge_set entries must be positive integers");
    f.bridge_set.push_back(static_cast<Index>(v.get<std::int64_t>() - 1));
  }
  if (!j.contains("edges") || !j["edges"].is_array())
    parse_fail("bridge JSON needs an \"edges\" array");
  std::set<std::pair<Index, Index>> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || e[0].get<std::int64_t>() < 1 ||
        e[1].get<std::int64_t>() < 1)
      parse_fail("bridge edge must be [a_vertex, b_vertex] with 1-based integers");
    std::pair<Index, Index> edge{static_cast<Index>(e[0].get<std::int64_t>() - 1),
                                 static_cast<Index>(e[1].get<std::int64_t>() - 1)};
    if (!seen.insert(edge).second) parse_fail("duplicate bridge edge");
    f.edges.push_back(edge);
  }
  return f;
}

Json bridge_file_to_json(const BridgeFile& f) {
  Json out;
  out["k_B"] = f.bridge_set.size();
  Json set = Json::array();
  for (Index v : f.bridge_set) set.push_back(v + 1);
  out["bridge_set"] = std::move(set);
  Json edges = Json::array();
  for (auto [a, b] : f.edges) edges.push_back(Json::array({a + 1, b + 1}));
  out["edges"] = std::move(edges);
  return out;
}

BridgeFile load_bridge_file(const std::string& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return bridge_file_from_json(j);
}

Blockd bridge_pattern(const BridgeFile& f, Index n, Index m) {
  Blockd htilde = Blockd::Zero(n, m);
  for (Index v : f.bridge_set)
    if (v >= m) parse_fail("bridge_set vertex outside G_B");
  for (auto [a, b] : f.edges) {
    if (a >= n || b >= m) {
      std::ostringstream os;
      os << "bridge edge (" << a + 1 << "," << b + 1 << ") outside " << n
         << "x" << m;
      parse_fail(os.str());
    }
    htilde(a, b) = 1.0;
  }
  return htilde;
}

std::string to_dot(const WeightedGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Index i = 0; i < g.size(); ++i)
    os << "  " << i + 1 << " [label=\"" << g.labels()[static_cast<std::size_t>(i)]
       << "\"];\n";
  char buf[32];
  for (Index i = 0; i < g.size(); ++i) {
    for (Index j = i; j < g.size(); ++j) {
      if (!g.has_edge(i, j)) continue;
      std::snprintf(buf, sizeof buf, "%.6g", g.adjacency()(i, j));
      os << "  " << i + 1 << " -- " << j + 1 << " [label=\"" << buf << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Json certificate_to_json(const GapCertificate& cert) {
  Json out;
  out["mu"] = cert.mu;
  out["eta"] = cert.eta;
  out["gap"] = cert.gap;
  out["margins"] = cert.margins;
  return out;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

namespace {

Json block_rows(const Blockd& b) {
  Json rows = Json::array();
  for (Index i = 0; i < b.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json search_result_to_json(const BridgeSearchSpec& spec,
                           const SearchResult& result) {
  BridgeFile file{result.best_bridge.bridge_set(), {}};
  for (Index a = 0; a < spec.n(); ++a)
    for (Index b : spec.bridge_set)
      if (result.best_htilde()(a, b) != 0.0) file.edges.emplace_back(a, b);

  Json out;
  out["schema"] = 1;
  Json set = Json::array();
  for (Index v : spec.bridge_set) set.push_back(v + 1);
  out["bridge_set"] = std::move(set);
  out["max_degree"] =
      spec.max_degree ? Json(*spec.max_degree) : Json(nullptr);
  out["require_bridge"] = spec.require_bridge;
  out["best_gap"] = result.best_gap;
  out["best_gap_text"] = fixed6(result.best_gap);
  out["best_encoding"] = result.best_encoding;
  out["bridging"] = result.bridging_description;
  out["bridge"] = bridge_file_to_json(file);
  out["htilde"] = block_rows(result.best_htilde());
  out["h"] = block_rows(result.best_h());
  out["certificate"] = certificate_to_json(result.certificate);
  out["relaxation_tight"] = result.relaxation_tight;
  out["candidates_evaluated"] = result.candidates_evaluated;
  out["candidates_pruned"] = result.candidates_pruned;
  out["feasible_count"] = result.feasible_count;
  out["optima_count"] = result.optima_count;
  return out;
}

}  // namespace hlgap
