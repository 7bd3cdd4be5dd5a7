#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fuzzy/matrix_io.hpp"

namespace fs = std::filesystem;

#ifndef FUZZY_CONFIG_DIR
#error "FUZZY_CONFIG_DIR must point at configs/"
#endif

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fuzzyspace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fuzzy::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string cfg(const std::string& name) { return std::string(FUZZY_CONFIG_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / "fuzzyspace_cli_tests" / name;
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

std::string write_config(const fs::path& dir, const std::string& text) {
  fs::create_directories(dir);
  const auto p = dir / "job.cfg";
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown subcommand 'frobnicate'") != std::string::npos);
  CHECK(r.err.find("Subcommands:") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"build", "--format", "png"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("runtime errors exit with 3") {
  const auto dir = scratch("errors");
  CHECK(run({"build", "--out", dir.string()}).code == 3);
  CHECK(run({"build", "--config", "/nonexistent.cfg"}).code == 3);
  const auto bad = write_config(dir, R"({"space": {"builder": "klein_bottle"}})");
  const auto r = run({"build", "--config", bad, "--out", dir.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("klein_bottle") != std::string::npos);
  const auto unknown = write_config(dir, R"({"spaces": {}})");
  CHECK(run({"build", "--config", unknown}).code == 3);
}

TEST_CASE("vertex writes three diagrams and dumps at 2N = 60") {
  const auto dir = scratch("vertex");
  const auto r = run({"vertex", "--config", cfg("paper_fig4.cfg"), "--out", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* c : {"X", "Y", "Z"}) {
    CHECK(fs::exists(dir / (std::string("string_vertex_") + c + ".svg")));
    const auto m = fuzzy::load_matrix((dir / (std::string("string_vertex_") + c + ".csv")).string());
    CHECK(m.dim() == 60);
  }
  CHECK(fs::exists(dir / "string_vertex.meta.json"));
  const auto again = scratch("vertex_again");
  REQUIRE(run({"vertex", "--config", cfg("paper_fig4.cfg"), "--out", again.string()}).code == 0);
  for (const auto& e : fs::directory_iterator(dir)) CHECK(slurp(e.path()) == slurp(again / e.path().filename()));
}

TEST_CASE("vertex decay sweep passes") {
  const auto dir = scratch("sweep");
  const auto r = run({"sweep", "--config", cfg("vertex_decay.cfg"), "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("non_increasing: PASS") != std::string::npos);
  CHECK(fs::exists(dir / "sweep_report.json"));
}

TEST_CASE("a failing verdict exits with 1") {
  const auto dir = scratch("sweep_fail");
  // A jump in the coefficient keeps one product entry at O(1) for every N.
  const auto c = write_config(dir, R"({
    "sweep": {"criterion": "product_convergence", "schedule": [20, 40, 80], "delta": 2,
      "pair": {
        "f": {"interval": [0, 1], "modes": [{"n": 1, "re": {"kind": "step", "at": 0.5, "below": 0, "above": 1}}]},
        "g": {"interval": [0, 1], "modes": [{"n": -1, "re": 1}]}}}})");
  const auto r = run({"sweep", "--config", c, "--out", dir.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("build then render round trip") {
  const auto dir = scratch("render");
  REQUIRE(run({"build", "--config", cfg("circle_to_eight.cfg"), "--out", dir.string(), "--n", "12", "--format", "bin",
               "--format", "svg"})
              .code == 0);
  const auto bin = dir / "circle_to_eight_X.bin";
  REQUIRE(fuzzy::load_matrix(bin.string()).dim() == 12);
  const auto out = dir / "rendered";
  REQUIRE(run({"render", bin.string(), "--out", out.string()}).code == 0);
  CHECK(slurp(out / "circle_to_eight_X.svg") == slurp(dir / "circle_to_eight_X.svg"));
}

TEST_CASE("render a zero matrix") {
  const auto dir = scratch("zero");
  fs::create_directories(dir);
  std::ofstream(dir / "zero.csv") << "# fuzzy-matrix dim=3 block_size=1\nrow,col,re,im\n";
  REQUIRE(run({"render", (dir / "zero.csv").string(), "--out", dir.string()}).code == 0);
  const auto svg = slurp(dir / "zero.svg");
  std::size_t n = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++n;
  CHECK(n == 9);
}

TEST_CASE("surface export and refusal") {
  const auto dir = scratch("surface");
  CHECK(run({"surface", "--config", cfg("circle_to_eight.cfg"), "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "circle_to_eight_surface.csv").rfind("sheet,q,phi,X,Y,Z,offdiag_residual\n", 0) == 0);
  CHECK(run({"surface", "--config", cfg("clifford.cfg"), "--out", dir.string()}).code == 3);
}

TEST_CASE("transform recipes from config") {
  const auto dir = scratch("transform");
  const auto r = run({"transform", "--config", cfg("cylinder_u.cfg"), "--out", dir.string(), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "fuzzy_cylinder_transformed_Z_prime.csv"));
  CHECK(slurp(dir / "fuzzy_cylinder_transformed.meta.json").find("\"diagonalizations\"") != std::string::npos);
  CHECK(run({"transform", "--config", cfg("clifford.cfg"), "--out", dir.string()}).code == 0);
}
