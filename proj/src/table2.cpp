#include "hlgap/table2.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace hlgap {

const std::vector<BenchmarkCase>& benchmark_cases() {
  static const std::vector<BenchmarkCase> cases = {
      {"F0", "F0", {1, 2}, 3, 2.255668, "1 → ∅; 2 → 2(1)"},
      {"F0bar", "F0", {1, 2}, 3, 0.835521, "1 → ∅; 2 → 2(1)"},
      {"F0", "F0bar", {1, 2}, 3, 0.835521, "1 → ∅; 2 → 2(1)"},
      {"F0bar", "F0bar", {1, 2}, 3, 0.720830, "1 → ∅; 2 → 6(1)"},
      {"F0", "F0", {1, 2}, std::nullopt, 2.540990, "1 → ∅; 2 → 4(0.5)"},
      {"F0bar", "F0", {1, 2}, std::nullopt, 0.871933,
       "1 → 3(1), 5(1), 6(1); 2 → ∅"},
      {"F0", "F0bar", {1, 2}, std::nullopt, 1.140215,
       "1 → 1(1), 2(1), 5(2); 2 → 1(1), 2(1), 3(2)"},
      {"F0bar", "F0bar", {1, 2}, std::nullopt, 0.749472,
       "1 → 3(1), 5(1); 2 → 6(1)"},
      {"B0", "B0", {1, 3}, 3, 2.0, "1 → ∅; 3 → 6(4)"},
      {"B0bar", "B0", {1, 3}, 3, 1.666731, "1 → ∅; 3 → 6(2)"},
      {"B0", "B0bar", {1, 3}, 3, 1.666731, "1 → ∅; 3 → 3(2)"},
      {"B0bar", "B0bar", {1, 3}, 3, 1.409249, "1 → ∅; 3 → 4(1)"},
      {"B0", "B0", {1, 3}, std::nullopt, 2.0, "1 → ∅; 3 → 6(4)"},
      {"B0bar", "B0", {1, 3}, std::nullopt, 2.0, "1 → ∅; 3 → 1(2), 3(2), 5(2)"},
      {"B0", "B0bar", {1, 3}, std::nullopt, 1.830242, "1 → ∅; 3 → 1(1), 5(1)"},
      {"B0bar", "B0bar", {1, 3}, std::nullopt, 1.569169,
       "1 → 1(1), 3(1), 5(1); 3 → ∅"},
  };
  return cases;
}

std::string_view status_name(BenchmarkStatus s) {
  switch (s) {
    case BenchmarkStatus::Match: return "match";
    case BenchmarkStatus::ExceedsPublished: return "exceeds-published";
    case BenchmarkStatus::BelowPublished: return "below-published";
  }
  return "unknown";
}

BridgeSearchSpec benchmark_spec(const BenchmarkCase& c) {
  std::vector<Index> bridge_set;
  for (Index v : c.bridge_set) bridge_set.push_back(v - 1);
  return make_search_spec(builtin_graph(c.ga), builtin_graph(c.gb),
                          std::move(bridge_set), c.max_degree);
}

BenchmarkRow run_benchmark_case(const BenchmarkCase& c,
                                const SearchOptions& options) {
  auto spec = benchmark_spec(c);
  auto result = optimize(spec, options);
  BenchmarkStatus status = BenchmarkStatus::Match;
  if (result.best_gap > c.published_gap + kBenchmarkTolerance)
    status = BenchmarkStatus::ExceedsPublished;
  else if (result.best_gap < c.published_gap - kBenchmarkTolerance)
    status = BenchmarkStatus::BelowPublished;
  return {c, std::move(spec), std::move(result), status};
}

std::vector<BenchmarkRow> run_table2(const SearchOptions& options) {
  std::vector<BenchmarkRow> rows;
  for (const auto& c : benchmark_cases())
    rows.push_back(run_benchmark_case(c, options));
  return rows;
}

Json table2_to_json(const std::vector<BenchmarkRow>& rows) {
  Json out;
  out["schema"] = 1;
  out["command"] = "table2";
  Json list = Json::array();
  int matched = 0;
  for (const auto& row : rows) {
    Json r;
    r["ga"] = row.input.ga;
    r["gb"] = row.input.gb;
    r["bridge_set"] = row.input.bridge_set;
    r["max_degree"] =
        row.input.max_degree ? Json(*row.input.max_degree) : Json(nullptr);
    r["best_gap"] = row.result.best_gap;
    r["best_gap_text"] = fixed6(row.result.best_gap);
    r["published_gap"] = row.input.published_gap;
    r["status"] = status_name(row.status);
    r["bridging"] = row.result.bridging_description;
    r["published_bridging"] = row.input.published_bridging;
    r["optima_count"] = row.result.optima_count;
    r["candidates_evaluated"] = row.result.candidates_evaluated;
    r["candidates_pruned"] = row.result.candidates_pruned;
    r["certificate"] = certificate_to_json(row.result.certificate);
    r["relaxation_tight"] = row.result.relaxation_tight;
    list.push_back(std::move(r));
    if (row.status == BenchmarkStatus::Match) ++matched;
  }
  out["rows"] = std::move(list);
  out["matched"] = matched;
  out["total"] = rows.size();
  return out;
}

std::string table2_to_text(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(7) << "G_A" << std::setw(7) << "G_B"
     << std::setw(8) << "maxdeg" << std::setw(11) << "gap" << std::setw(11)
     << "published" << std::setw(19) << "status"
     << "bridging\n";
  for (const auto& row : rows) {
    os << std::left << std::setw(7) << row.input.ga << std::setw(7)
       << row.input.gb << std::setw(8)
       << (row.input.max_degree ? std::to_string(*row.input.max_degree) : "-")
       << std::setw(11) << fixed6(row.result.best_gap) << std::setw(11)
       << fixed6(row.input.published_gap) << std::setw(19)
       << status_name(row.status) << row.result.bridging_description << "\n";
  }
  return os.str();
}

}  // namespace hlgap
