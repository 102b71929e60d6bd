#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "hlgap/optimizer.hpp"
#include "oracles.hpp"

using namespace hlgap;

namespace {

WeightedGraph path(int n, double w = 1.0) {
  Blockd a = Blockd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = w;
  return WeightedGraph(SymMatrixd(a));
}

BridgeSearchSpec spec_for(const std::string& a, const std::string& b,
                          std::vector<Index> set, std::optional<int> deg) {
  return make_search_spec(builtin_graph(a), builtin_graph(b), std::move(set), deg);
}

// Reference optimum: every one of the 2^bits patterns through evaluate. The
// gap is the exact maximum; the pattern is the first one within the tie band.
std::pair<double, Encoding> brute_force(const BridgeSearchSpec& spec) {
  std::vector<std::pair<Encoding, double>> feasible;
  for (Encoding code = 0; code < (Encoding{1} << spec.bits()); ++code)
    if (const auto g = evaluate(spec, decode(spec, code))) feasible.emplace_back(code, *g);
  REQUIRE_FALSE(feasible.empty());
  double best = feasible.front().second;
  for (const auto& [code, g] : feasible) best = std::max(best, g);
  for (const auto& [code, g] : feasible)
    if (g >= best - kTieTolerance * std::max(1.0, std::abs(best))) return {best, code};
  return {best, 0};
}

ErrorCode spec_code(WeightedGraph a, WeightedGraph b, std::vector<Index> set,
                    std::optional<int> deg = std::nullopt) {
  try {
    make_search_spec(std::move(a), std::move(b), std::move(set), deg);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("make_search_spec validation") {
  const auto spec = spec_for("F0", "fulvene", {1, 0}, 3);
  CHECK(spec.bridge_set == std::vector<Index>{0, 1});
  CHECK(spec.bits() == 12);
  CHECK(spec.va.d == fulvene_weighted_voltage());

  const auto f = builtin_graph("fulvene");
  const auto benzene = builtin_graph("benzene");
  CHECK(spec_code(f, f, {}) == ErrorCode::SpecInvalid);
  CHECK(spec_code(f, f, {0, 0}) == ErrorCode::SpecInvalid);
  CHECK(spec_code(f, f, {0, 6}) == ErrorCode::SpecInvalid);
  CHECK(spec_code(f, f, {0, 1}, -1) == ErrorCode::SpecInvalid);
  CHECK(spec_code(f, benzene, {0, 1}) == ErrorCode::SpecInvalid);
  CHECK(spec_code(path(3), f, {0, 1}) == ErrorCode::SpecInvalid);
  CHECK(spec_code(f, f, {5}) == ErrorCode::SpecInvalid);
}

TEST_CASE("encoding is row-major with entry (0,0) most significant") {
  const auto spec = spec_for("benzene", "benzene", {0, 2}, std::nullopt);
  Blockd h = Blockd::Zero(6, 6);
  h(0, 0) = 1.0;
  CHECK(encode(spec, h) == Encoding{1} << 11);
  h.setZero();
  h(5, 2) = 1.0;
  CHECK(encode(spec, h) == 1u);
  h(0, 2) = 1.0;
  CHECK(encode(spec, h) == ((Encoding{1} << 10) | 1u));
  for (Encoding code = 0; code < 4096; code += 37)
    CHECK(encode(spec, decode(spec, code)) == code);
  CHECK(decode(spec, 1u)(5, 2) == 1.0);
}

TEST_CASE("enumeration without a degree cap") {
  const auto spec = spec_for("F0", "F0", {0, 1}, std::nullopt);
  std::vector<Encoding> seen;
  const auto stats = enumerate(spec, [&](Encoding c) { seen.push_back(c); });
  CHECK(stats.emitted == 4095);
  CHECK(stats.pruned == 1);
  CHECK(seen.front() == 1u);
  CHECK(seen.back() == 4095u);
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  const auto all = enumerate(spec, [](Encoding) {}, false);
  CHECK(all.emitted == 4096);
  CHECK(all.pruned == 0);
}

TEST_CASE("degree pruning emits exactly the feasible patterns") {
  for (const char* name : {"fulvene", "benzene"}) {
    const std::vector<Index> set =
        std::string(name) == "fulvene" ? std::vector<Index>{0, 1}
                                       : std::vector<Index>{0, 2};
    const auto spec = spec_for(name, name, set, 3);
    std::vector<Encoding> pruned;
    const auto stats = enumerate(spec, [&](Encoding c) { pruned.push_back(c); });
    CHECK(stats.emitted + stats.pruned == 4096);

    std::vector<Encoding> feasible;
    for (Encoding c = 0; c < 4096; ++c)
      if (evaluate(spec, decode(spec, c))) feasible.push_back(c);
    CHECK(pruned == feasible);
  }
}

TEST_CASE("a single-vertex G_A") {
  Blockd one(1, 1);
  one << 2.0;
  const auto spec = make_search_spec(WeightedGraph(SymMatrixd(one)),
                                     builtin_graph("benzene"), {0, 2});
  CHECK(spec.bits() == 2);
  const auto result = optimize(spec, {.threads = 1});
  CHECK(result.candidates_evaluated == 3);
  CHECK(result.best_gap == brute_force(spec).first);
}

TEST_CASE("evaluate examples") {
  const auto b0 = spec_for("B0", "B0", {0, 2}, 3);
  Blockd h = Blockd::Zero(6, 6);
  h(5, 2) = 1.0;
  const auto g = evaluate(b0, h);
  REQUIRE(g.has_value());
  CHECK(*g == doctest::Approx(2.0).epsilon(1e-9));

  CHECK_FALSE(evaluate(b0, Blockd::Zero(6, 6)).has_value());
  h(5, 1) = 1.0;
  CHECK_FALSE(evaluate(b0, h).has_value());  // column outside the bridge set

  const auto fb = spec_for("fulvene", "fulvene", {0, 1}, 3);
  Blockd deg = Blockd::Zero(6, 6);
  deg(3, 0) = 1.0;  // vertex 4 of fulvene already has degree 3
  CHECK_FALSE(evaluate(fb, deg).has_value());

  CHECK_THROWS_AS(evaluate(fb, Blockd::Zero(5, 6)), Error);
}

TEST_CASE("published optima") {
  const auto r1 = optimize(spec_for("F0bar", "F0bar", {0, 1}, 3));
  CHECK(std::abs(r1.best_gap - 0.720830) <= 1e-4);
  CHECK(r1.bridging_description == "1 → ∅; 2 → 6(1)");

  const auto r2 = optimize(spec_for("B0bar", "B0bar", {0, 2}, 3));
  CHECK(std::abs(r2.best_gap - 1.409249) <= 1e-4);

  const auto r3 = optimize(spec_for("F0", "F0", {0, 1}, std::nullopt));
  CHECK(std::abs(r3.best_gap - 2.540990) <= 1e-4);
  CHECK(r3.bridging_description == "1 → ∅; 2 → 4(0.5)");
  CHECK(r3.candidates_evaluated == 4095);
  CHECK(r3.relaxation_tight);
  CHECK(r3.certificate.margins[0] >= -1e-8);
  CHECK(r3.certificate.margins[1] >= -1e-8);
  CHECK(r3.certificate.gap == doctest::Approx(r3.best_gap).epsilon(1e-12));
}

TEST_CASE("optimize matches brute force on small instances") {
  struct Case {
    WeightedGraph a;
    std::string b;
    std::vector<Index> set;
    std::optional<int> deg;
  };
  const std::vector<Case> cases{
      {path(2), "fulvene", {0, 1}, std::nullopt},
      {path(4, 1.5), "F0", {0, 1}, 3},
      {path(2, -0.5), "benzene", {0, 2}, 3},
      {builtin_graph("fulvene"), "B0", {0}, std::nullopt},
      {builtin_graph("F0"), "benzene", {2}, 3},
      {path(6), "fulvene", {1}, 3},
  };
  for (const auto& c : cases) {
    const auto spec = make_search_spec(c.a, builtin_graph(c.b), c.set, c.deg);
    REQUIRE(spec.bits() <= 14);
    const auto [gap, code] = brute_force(spec);
    const auto result = optimize(spec);
    CHECK(result.best_gap == gap);
    CHECK(result.best_encoding == code);
    CHECK(result.best_htilde() == decode(spec, code));

    // sanity lower bound: every single-edge bridge
    for (int p = 0; p < spec.bits(); ++p) {
      const auto g = evaluate(spec, decode(spec, Encoding{1} << p));
      if (g) CHECK(result.best_gap >= *g);
    }
  }
}

TEST_CASE("pruning and thread count do not change the result") {
  const auto spec = spec_for("F0", "F0bar", {0, 1}, std::nullopt);
  const auto base = optimize(spec, {.threads = 1, .prune = true});
  for (unsigned threads : {1u, 2u, 3u, 8u}) {
    for (bool prune : {true, false}) {
      const auto r = optimize(spec, {.threads = threads, .prune = prune});
      CHECK(r.best_gap == base.best_gap);
      CHECK(r.best_encoding == base.best_encoding);
      CHECK(r.best_htilde() == base.best_htilde());
      CHECK(r.optima_count == base.optima_count);
      CHECK(r.feasible_count == base.feasible_count);
      CHECK(r.bridging_description == base.bridging_description);
    }
  }
}

TEST_CASE("ties go to the smallest encoding") {
  // B0-B0 with no cap: several bridges reach gap 2.
  const auto spec = spec_for("B0", "B0", {0, 2}, std::nullopt);
  const auto r = optimize(spec);
  CHECK(r.optima_count > 1);
  for (Encoding c = 1; c < r.best_encoding; ++c) {
    const auto g = evaluate(spec, decode(spec, c));
    if (g) CHECK(*g < r.best_gap - kTieTolerance * r.best_gap);
  }
}

TEST_CASE("no feasible candidate") {
  const auto spec = spec_for("fulvene", "fulvene", {0, 1}, 2);
  try {
    optimize(spec);
    FAIL("expected NoFeasibleCandidate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoFeasibleCandidate);
  }
}

TEST_CASE("empty bridge when allowed") {
  auto spec = spec_for("benzene", "benzene", {0, 2}, 2);
  spec.require_bridge = false;
  const auto r = optimize(spec);
  CHECK(r.best_encoding == 0u);
  CHECK(r.bridging_description == "1 → ∅; 3 → ∅");
  CHECK(r.best_gap == doctest::Approx(2.0));
}

TEST_CASE("audit log") {
  const auto spec = spec_for("fulvene", "fulvene", {0, 1}, 3);
  std::ostringstream audit;
  const auto r = optimize(spec, {.threads = 1, .prune = true, .audit = &audit});
  std::istringstream lines(audit.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "encoding,htilde,feasible,gap");
  std::uint64_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == r.candidates_evaluated);
}
