#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "hlgap/cli.hpp"
#include "hlgap/io.hpp"

using namespace hlgap;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "hlgap_cli_test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("gap of benzene") {
  const auto r = run({"gap", "--graph", "builtin:benzene"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "2.000000\n");

  const auto j = Json::parse(run({"gap", "-g", "builtin:benzene", "--json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["gap_text"] == "2.000000");
  CHECK(j["certificate"]["mu"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("spectrum") {
  const auto r = run({"spectrum", "-g", "builtin:B0bar"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "2.000000\n1.000000\n1.000000\n-1.000000\n-1.000000\n-2.000000\n");

  const auto j = Json::parse(run({"spectrum", "-g", "builtin:benzene", "--json"}).out);
  CHECK(j["spectrum"].size() == 6);
  CHECK(j["closed_shell"] == true);
}

TEST_CASE("usage and I/O errors exit with 2") {
  CHECK(run({"spectrum", "--graph", "nonexistent.json"}).code == kExitIoError);
  CHECK(run({"spectrum", "--graph", "nonexistent.json"}).err.find("IoError") !=
        std::string::npos);
  CHECK(run({}).code == kExitIoError);
  CHECK(run({"frobnicate"}).code == kExitIoError);
  CHECK(run({"gap"}).code == kExitIoError);
  CHECK(run({"gap", "-g", "builtin:naphthalene"}).code == kExitIoError);
  CHECK(run({"optimize", "--a", "builtin:fulvene", "--b", "builtin:fulvene",
             "--bridge-set", "one"})
            .code == kExitIoError);

  TempDir dir;
  const auto bad = dir.file("bad.json", R"({"n": 2, "edges": [[2, 1, 1]]})");
  CHECK(run({"gap", "-g", bad}).code == kExitIoError);
}

TEST_CASE("help exits with 0") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"optimize", "--help"}).code == kExitOk);
}

TEST_CASE("domain errors exit with 1") {
  TempDir dir;
  const auto p3 = dir.file("p3.json", R"({"n": 3, "edges": [[1, 2, 1], [2, 3, 1]]})");
  const auto r = run({"gap", "-g", p3});
  CHECK(r.code == kExitDomainError);
  CHECK(r.err.find("ZeroEigenvalue") != std::string::npos);

  CHECK(run({"optimize", "--a", "builtin:fulvene", "--b", "builtin:fulvene",
             "--bridge-set", "1,2", "--max-degree", "2"})
            .code == kExitDomainError);
  CHECK(run({"optimize", "--a", "builtin:fulvene", "--b", "builtin:benzene",
             "--bridge-set", "1,2"})
            .code == kExitDomainError);
}

TEST_CASE("optimize") {
  TempDir dir;
  const auto dot = dir.path("best.dot");
  const auto audit = dir.path("audit.csv");
  const auto r = run({"optimize", "--a", "builtin:fulvene", "--b", "builtin:fulvene",
                      "--bridge-set", "1,2", "--max-degree", "3", "--json",
                      "--dot", dot, "--audit", audit, "--threads", "2"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "optimize");
  CHECK(std::abs(j["best_gap"].get<double>() - 0.720830) <= 1e-4);
  CHECK(j["bridging"] == "1 → ∅; 2 → 6(1)");
  CHECK(j["relaxation_tight"] == true);
  CHECK(std::filesystem::exists(dot));
  CHECK(read_file(dot).starts_with("graph G {"));
  CHECK(read_file(audit).starts_with("encoding,htilde,feasible,gap\n"));

  const auto text = run({"optimize", "--a", "builtin:F0", "--b", "builtin:F0",
                         "--bridge-set", "1,2"});
  CHECK(text.out.starts_with("best_gap 2.540990\nbridging 1 → ∅; 2 → 4(0.5)\n"));
}

TEST_CASE("bridge and certify") {
  TempDir dir;
  const auto h = dir.file("h.json", R"({"k_B": 2, "bridge_set": [1, 2], "edges": [[4, 2]]})");
  const auto r = run({"bridge", "--a", "builtin:F0", "--b", "builtin:F0", "--h", h});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == "vertices 12\ngap 2.540990\nbridging 1 → ∅; 2 → 4(0.5)\n");

  const auto j = Json::parse(
      run({"bridge", "--a", "builtin:F0", "--b", "builtin:F0", "--h", h, "--json"}).out);
  CHECK(j["graph"]["n"] == 12);

  const auto c = run({"certify", "--a", "builtin:F0", "--b", "builtin:F0", "--h", h});
  REQUIRE(c.code == kExitOk);
  CHECK(c.out.find("gap 2.540990\n") != std::string::npos);
  CHECK(c.out.find("relaxation_tight yes\n") != std::string::npos);

  const auto outside =
      dir.file("out.json", R"({"k_B": 2, "bridge_set": [1, 2], "edges": [[1, 6]]})");
  const auto v = run({"bridge", "--a", "builtin:fulvene", "--b", "builtin:fulvene",
                      "--h", outside});
  CHECK(v.code == kExitDomainError);
  CHECK(v.err.find("ColumnConstraintViolated") != std::string::npos);
}
