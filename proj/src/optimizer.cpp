#include "hlgap/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace hlgap {

namespace {

constexpr int kMaxBits = 62;

SearchResult make_result(BridgeMatrix bridge) {
  return SearchResult{.best_bridge = std::move(bridge),
                      .certificate = {},
                      .bridging_description = {}};
}

}  // namespace

BridgeSearchSpec make_search_spec(WeightedGraph ga, WeightedGraph gb,
                                  std::vector<Index> bridge_set,
                                  std::optional<int> max_degree,
                                  bool require_bridge, double tol) {
  std::sort(bridge_set.begin(), bridge_set.end());
  if (bridge_set.empty())
    throw Error(ErrorCode::SpecInvalid, "bridge set is empty");
  if (std::adjacent_find(bridge_set.begin(), bridge_set.end()) !=
      bridge_set.end())
    throw Error(ErrorCode::SpecInvalid, "bridge set lists a vertex twice");
  if (bridge_set.front() < 0 || bridge_set.back() >= gb.size())
    throw Error(ErrorCode::SpecInvalid, "bridge-set vertex outside G_B");
  if (max_degree && *max_degree < 0)
    throw Error(ErrorCode::SpecInvalid, "max degree must be nonnegative");
  if (ga.size() * static_cast<Index>(bridge_set.size()) > kMaxBits)
    throw Error(ErrorCode::SpecInvalid, "n * k_B exceeds 62 binary unknowns");

  try {
    for (const auto* g : {&ga, &gb}) {
      if (eigenvalues(g->adjacency()).cwiseAbs().minCoeff() <
          zero_threshold(g->adjacency()))
        throw Error(ErrorCode::SpecInvalid,
                    std::string(g == &ga ? "G_A" : "G_B") + " is not invertible");
    }
    if (!is_arbitrarily_bridgeable(gb, bridge_set, tol))
      throw Error(ErrorCode::SpecInvalid,
                  "G_B is not arbitrarily bridgeable over the bridge set");
    auto va = recover_voltage(ga, tol);
    auto vb = recover_voltage(gb, tol);
    return BridgeSearchSpec{std::move(ga),        std::move(gb),
                            std::move(va),        std::move(vb),
                            std::move(bridge_set), max_degree,
                            require_bridge};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SpecInvalid) throw;
    throw Error(ErrorCode::SpecInvalid, e.what());
  }
}

Blockd decode(const BridgeSearchSpec& spec, Encoding code) {
  const int bits = spec.bits();
  const Index k = spec.k_b();
  Blockd htilde = Blockd::Zero(spec.n(), spec.m());
  for (int p = 0; p < bits; ++p) {
    if ((code >> (bits - 1 - p)) & 1u)
      htilde(p / k, spec.bridge_set[static_cast<std::size_t>(p % k)]) = 1.0;
  }
  return htilde;
}

Encoding encode(const BridgeSearchSpec& spec, const Blockd& htilde) {
  const int bits = spec.bits();
  const Index k = spec.k_b();
  Encoding code = 0;
  for (int p = 0; p < bits; ++p) {
    code <<= 1;
    if (htilde(p / k, spec.bridge_set[static_cast<std::size_t>(p % k)]) != 0.0)
      code |= 1u;
  }
  return code;
}

EnumerationStats enumerate(const BridgeSearchSpec& spec,
                           const std::function<void(Encoding)>& visit,
                           bool prune) {
  const int bits = spec.bits();
  const Index k = spec.k_b();
  std::vector<int> deg_a = binary_degrees(spec.ga);
  std::vector<int> deg_b = binary_degrees(spec.gb);
  EnumerationStats stats;
  const bool cap = prune && spec.max_degree.has_value();
  const int max_degree = spec.max_degree.value_or(0);

  if (cap) {
    const auto over = [&](int d) { return d > max_degree; };
    if (std::any_of(deg_a.begin(), deg_a.end(), over) ||
        std::any_of(deg_b.begin(), deg_b.end(), over)) {
      stats.pruned = Encoding{1} << bits;
      return stats;
    }
  }

  auto dfs = [&](auto&& self, int p, Encoding code) -> void {
    if (p == bits) {
      if (prune && spec.require_bridge && code == 0) {
        ++stats.pruned;
        return;
      }
      ++stats.emitted;
      visit(code);
      return;
    }
    self(self, p + 1, code << 1);

    auto& da = deg_a[static_cast<std::size_t>(p / k)];
    auto& db = deg_b[static_cast<std::size_t>(
        spec.bridge_set[static_cast<std::size_t>(p % k)])];
    if (cap && (da + 1 > max_degree || db + 1 > max_degree)) {
      stats.pruned += Encoding{1} << (bits - p - 1);
      return;
    }
    ++da;
    ++db;
    self(self, p + 1, (code << 1) | 1u);
    --da;
    --db;
  };
  dfs(dfs, 0, 0);
  return stats;
}

std::optional<double> evaluate(const BridgeSearchSpec& spec,
                               const Blockd& htilde) {
  if (htilde.rows() != spec.n() || htilde.cols() != spec.m()) {
    throw Error(ErrorCode::DimensionMismatch,
                "bridge pattern must be n x m");
  }
  const auto bm =
      BridgeMatrix::from_voltage(htilde, spec.va.d, spec.vb.d, spec.bridge_set);
  if (!bm.satisfies_column_constraint()) return std::nullopt;
  if (spec.require_bridge && htilde.isZero(0.0)) return std::nullopt;

  const auto pattern = assemble(spec.va.binary, spec.vb.binary, htilde);
  if (spec.max_degree) {
    const auto degrees = binary_degrees(WeightedGraph(pattern));
    if (*std::max_element(degrees.begin(), degrees.end()) > *spec.max_degree)
      return std::nullopt;
  }
  try {
    return gap_analytic(assemble(spec.ga.adjacency(), spec.gb.adjacency(),
                                 bm.h()))
        .gap;
  } catch (const Error& e) {
    // det C = det A * det B for feasible bridges, so this is a numerical bug
    throw Error(ErrorCode::InternalError,
                std::string("bridged graph lost invertibility: ") + e.what());
  }
}

SearchResult optimize(const BridgeSearchSpec& spec,
                      const SearchOptions& options) {
  std::vector<Encoding> codes;
  const auto stats = enumerate(
      spec, [&](Encoding c) { codes.push_back(c); }, options.prune);
  if (codes.empty()) {
    throw Error(ErrorCode::NoFeasibleCandidate,
                "the constraints exclude every bridge");
  }

  constexpr double kInfeasible = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> gaps(codes.size(), kInfeasible);
  unsigned workers = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, codes.size()));

  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    try {
      // strided split; each slot is written by exactly one worker
      for (std::size_t i = w; i < codes.size(); i += workers) {
        if (auto g = evaluate(spec, decode(spec, codes[i]))) gaps[i] = *g;
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  // exact maximum first, then the smallest encoding within the tie band
  std::optional<double> max_gap;
  std::uint64_t feasible = 0;
  for (double g : gaps) {
    if (std::isnan(g)) continue;
    ++feasible;
    if (!max_gap || g > *max_gap) max_gap = g;
  }
  if (!max_gap) {
    throw Error(ErrorCode::NoFeasibleCandidate,
                "the constraints exclude every bridge");
  }
  const double best_gap = *max_gap;
  const double tie = kTieTolerance * std::max(1.0, std::abs(best_gap));
  const auto is_optimal = [&](double g) {
    return !std::isnan(g) && g >= best_gap - tie;
  };
  const auto best = static_cast<std::size_t>(
      std::find_if(gaps.begin(), gaps.end(), is_optimal) - gaps.begin());

  if (options.audit) {
    auto& os = *options.audit;
    os << "encoding,htilde,feasible,gap\n";
    const int bits = spec.bits();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      os << codes[i] << ',';
      for (int p = bits - 1; p >= 0; --p) os << ((codes[i] >> p) & 1u);
      if (std::isnan(gaps[i])) {
        os << ",0,\n";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", gaps[i]);
        os << ",1," << buf << '\n';
      }
    }
  }

  auto result = make_result(BridgeMatrix::from_voltage(
      decode(spec, codes[best]), spec.va.d, spec.vb.d, spec.bridge_set));
  result.best_gap = best_gap;
  result.best_encoding = codes[best];
  result.candidates_evaluated = stats.emitted;
  result.candidates_pruned = stats.pruned;
  result.feasible_count = feasible;
  result.optima_count =
      static_cast<std::uint64_t>(std::count_if(gaps.begin(), gaps.end(), is_optimal));

  const auto optimum = gap_analytic(
      assemble(spec.ga.adjacency(), spec.gb.adjacency(), result.best_h()));
  result.certificate = certify_bridged_lmi(spec.ga, spec.gb, result.best_bridge,
                                           optimum.mu, optimum.eta);
  result.relaxation_tight =
      certify_relaxation_tightness(result.best_htilde(), spec.va.d, spec.vb.d);
  result.bridging_description = describe_bridging(result);
  return result;
}

std::string describe_bridging(const SearchResult& result) {
  return describe_bridge(result.best_bridge);
}

}  // namespace hlgap
