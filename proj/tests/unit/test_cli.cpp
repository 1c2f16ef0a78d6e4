#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bigramsey/io.hpp"
#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using bigramsey::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("bigramsey_cli_" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text = "") const {
    const auto p = path / name;
    if (!text.empty()) std::ofstream(p) << text;
    return p.string();
  }
};

}  // namespace

TEST_CASE("devlin subcommand") {
  auto r = call({"devlin", "--n", "3", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "16\n");
  r = call({"devlin", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "7936\n");
  r = call({"devlin", "--n", "5", "--full", "--cap", "10"});
  CHECK(r.code == 2);
  CHECK(call({"devlin"}).code == 1);
  CHECK(call({"devlin", "--n", "0"}).code == 1);
  CHECK(call({"devlin", "--n", "3", "--full", "--count-only"}).code == 1);
}

TEST_CASE("oracle subcommands") {
  CHECK(call({"oracle", "tangent", "--n", "6"}).out == "353792\n");
  CHECK(call({"oracle", "hook", "--n", "4"}).out == "272\n");
  const auto r = call({"oracle", "brute", "devlin", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "16\n");
}

TEST_CASE("sauer and hyper subcommands") {
  TempDir dir;
  CHECK(call({"sauer", "--graph", dir.file("missing.g")}).code == 1);
  const auto bad = dir.file("bad.g", "graph 2\n0 5\n");
  const auto r_bad = call({"sauer", "--graph", bad});
  CHECK(r_bad.code == 1);
  CHECK(r_bad.err.find("line 2") != std::string::npos);

  const auto edge = dir.file("edge.g", "graph 2\n0 1\n");
  auto r = call({"sauer", "--graph", edge});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(call({"oracle", "brute", "sauer", "--graph", edge}).out == "2\n");
  CHECK(call({"hyper", "--hypergraph", edge}).code == 1);

  const auto pair = dir.file("pair.h", "hypergraph3 2\n");
  r = call({"hyper", "--hypergraph", pair, "--tie-reading", "both", "--out", dir.file("pair.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("literal ") == 0);
  CHECK(r.out.find("\nstrict ") != std::string::npos);
  CHECK(fs::exists(dir.path / "pair.literal.json"));
  CHECK(fs::exists(dir.path / "pair.strict.json"));
  CHECK(bigramsey::load_catalog(dir.path / "pair.strict.json").settings.at("tie_reading") == "strict");
  CHECK(call({"oracle", "brute", "hyper", "--hypergraph", pair, "--tie-reading", "strict"}).code == 0);
  CHECK(call({"hyper", "--hypergraph", pair, "--tie-reading", "sideways"}).code == 1);
}

TEST_CASE("catalog round trip and DOT export") {
  TempDir dir;
  const auto catalog = dir.file("d3.json");
  REQUIRE(call({"devlin", "--n", "3", "--out", catalog}).code == 0);
  const auto loaded = bigramsey::load_catalog(catalog);
  CHECK(loaded.count == 16);
  CHECK(loaded.codes.size() == 16);
  const auto r = call({"export-dot", "--catalog", catalog, "--out", (dir.path / "dots").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "16\n");
  CHECK(fs::exists(dir.path / "dots" / "shape_00.dot"));
  CHECK(fs::exists(dir.path / "dots" / "shape_15.dot"));

  const auto counted = dir.file("d7.json");
  REQUIRE(call({"devlin", "--n", "4", "--count-only", "--out", counted}).code == 0);
  CHECK(call({"export-dot", "--catalog", counted, "--out", (dir.path / "none").string()}).code == 1);
}

TEST_CASE("realized subcommand") {
  const auto r = call({"realized", "--family", "sauer", "--n", "2", "--size", "64", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("survey exhaustive\n") != std::string::npos);
  CHECK(r.out.find("shapes 4\n") != std::string::npos);
  CHECK(r.out.find("outside_catalog 0\n") != std::string::npos);
  const auto s = call({"realized", "--family", "devlin", "--n", "3", "--size", "64", "--budget", "100", "--seed", "3"});
  CHECK(s.out.find("survey sampled\n") != std::string::npos);
  CHECK(s.out == call({"realized", "--family", "devlin", "--n", "3", "--size", "64", "--budget", "100", "--seed", "3"}).out);
  CHECK(call({"realized", "--family", "devlin", "--n", "5", "--size", "3"}).code == 1);
}
