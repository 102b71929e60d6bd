#ifndef HLGAP_TABLE2_HPP
#define HLGAP_TABLE2_HPP

#include <optional>
#include <string>
#include <vector>

#include "hlgap/io.hpp"

namespace hlgap {

/// One published optimal-bridging benchmark: fulvene pairs bridged over
/// G_B's vertices {1, 2}, benzene pairs over {1, 3}, with and without the
/// chemical degree cap of 3.
struct BenchmarkCase {
  std::string ga;                    // builtin name
  std::string gb;                    // builtin name
  std::vector<Index> bridge_set;     // 1-based
  std::optional<int> max_degree;
  double published_gap;
  std::string published_bridging;
};

/// The 16 published rows, in publication order.
const std::vector<BenchmarkCase>& benchmark_cases();

/// Agreement band between a reproduced optimum and the published value.
inline constexpr double kBenchmarkTolerance = 1e-4;

enum class BenchmarkStatus { Match, ExceedsPublished, BelowPublished };

std::string_view status_name(BenchmarkStatus s);

struct BenchmarkRow {
  BenchmarkCase input;
  BridgeSearchSpec spec;
  SearchResult result;
  BenchmarkStatus status;
};

BridgeSearchSpec benchmark_spec(const BenchmarkCase& c);
BenchmarkRow run_benchmark_case(const BenchmarkCase& c,
                                const SearchOptions& options = {});
std::vector<BenchmarkRow> run_table2(const SearchOptions& options = {});

/// Schema-versioned, free of timings, so identical across runs.
Json table2_to_json(const std::vector<BenchmarkRow>& rows);
std::string table2_to_text(const std::vector<BenchmarkRow>& rows);

}  // namespace hlgap

#endif  // HLGAP_TABLE2_HPP
