#include <filesystem>
#include <fstream>

#include "bigramsey/devlin.hpp"
#include "bigramsey/errors.hpp"
#include "bigramsey/hyper.hpp"
#include "bigramsey/io.hpp"
#include "bigramsey/sauer.hpp"
#include "doctest.h"

using namespace bigramsey;

TEST_CASE("structure files") {
  SUBCASE("graph with comments and blank lines") {
    const auto s = parse_structure("# path\ngraph 3\n\n0 1\n2 1  # reversed\n");
    REQUIRE(std::holds_alternative<Graph>(s));
    const auto& g = std::get<Graph>(s);
    CHECK(g.vertex_count == 3);
    CHECK(g.edges == EdgeSet{{0, 1}, {1, 2}});
    CHECK(parse_structure(structure_text(g)).index() == 0);
  }
  SUBCASE("hypergraph") {
    const auto s = parse_structure("hypergraph3 4\n0 1 2\n3 1 0\n");
    REQUIRE(std::holds_alternative<Hypergraph3>(s));
    CHECK(std::get<Hypergraph3>(s).triples == TripleSet{{0, 1, 2}, {0, 1, 3}});
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_structure(""), MalformedInput);
    CHECK_THROWS_AS(parse_structure("tree 3\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("graph 0\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("graph 3\n0 3\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("graph 3\n0 1\n1 0\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("graph 3\n1 1\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("graph 3\n0 1 2\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("graph 3\n0 x\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("graph 3\n0 -1\n"), MalformedInput);
    CHECK_THROWS_AS(parse_structure("hypergraph3 3\n0 1 1\n"), MalformedInput);
    CHECK_THROWS_AS(load_structure("/nonexistent/file.g"), MalformedInput);
  }
  SUBCASE("diagnostics name the line") {
    try {
      parse_structure("graph 3\n0 1\n0 7\n");
      FAIL("no exception");
    } catch (const MalformedInput& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
}

TEST_CASE("input digest") {
  CHECK(input_digest("") == "cbf29ce484222325");
  CHECK(input_digest("a") == "af63dc4c8601ec8c");
  CHECK(input_digest("graph 2\n") != input_digest("graph 3\n"));
}

TEST_CASE("catalog JSON round trip") {
  const auto devlin = enumerate_devlin(4);
  const auto back = catalog_from_json(catalog_to_json(devlin));
  CHECK(back.family == Family::devlin);
  CHECK(back.n == 4);
  CHECK(back.count == 272);
  CHECK(back.retained);
  CHECK(back.codes == devlin.codes);
  CHECK(back.settings == devlin.settings);

  EnumerationOptions strict;
  strict.reading = TieReading::strict;
  const auto hyper = enumerate_hyper(Hypergraph3::empty(2), strict);
  const auto hyper_back = catalog_from_json(catalog_to_json(hyper));
  CHECK(hyper_back.codes == hyper.codes);
  CHECK(hyper_back.input == hyper.input);
  CHECK(hyper_back.settings.at("tie_reading") == "strict");

  const auto counted = catalog_from_json(catalog_to_json(devlin, false));
  CHECK_FALSE(counted.retained);
  CHECK(counted.count == 272);

  const auto path = std::filesystem::temp_directory_path() / "bigramsey_io_test.json";
  save_catalog(hyper, path);
  CHECK(load_catalog(path).codes == hyper.codes);
  std::filesystem::remove(path);
}

TEST_CASE("catalog JSON validation") {
  const auto good = catalog_to_json(enumerate_devlin(2));
  CHECK_THROWS_AS(catalog_from_json("{"), MalformedInput);
  CHECK_THROWS_AS(catalog_from_json("{}"), MalformedInput);
  auto bad_count = good;
  bad_count.replace(bad_count.find("\"2\""), 3, "\"3\"");
  CHECK_THROWS_AS(catalog_from_json(bad_count), MalformedInput);
  auto bad_family = good;
  bad_family.replace(bad_family.find("devlin"), 6, "sauer ");
  CHECK_THROWS_AS(catalog_from_json(bad_family), MalformedInput);
  auto bad_digest = catalog_to_json(enumerate_sauer(Graph::complete(2)));
  bad_digest.replace(bad_digest.find("graph 2"), 7, "graph 3");
  CHECK_THROWS_AS(catalog_from_json(bad_digest), MalformedInput);
}

TEST_CASE("DOT export") {
  for (const auto& code : enumerate_devlin(2).codes) {
    const auto dot = shape_to_dot(Family::devlin, code, "s");
    CHECK(dot.find("graph \"s\"") == 0);
    CHECK(dot.find("n2 [") != std::string::npos);
  }
  const auto sauer = enumerate_sauer(Graph::complete(2));
  CHECK(shape_to_dot(Family::sauer, sauer.codes.front(), "e").find("dashed") != std::string::npos);
  const auto hyper = enumerate_hyper(Hypergraph3::make(3, TripleSet{{0, 1, 2}}));
  bool dotted = false;
  bool hyperedge = false;
  for (const auto& code : hyper.codes) {
    const auto dot = shape_to_dot(Family::hyper, code, "h");
    dotted = dotted || dot.find("dotted") != std::string::npos;
    hyperedge = hyperedge || dot.find("h0 -- n") != std::string::npos;
  }
  CHECK(dotted);
  CHECK(hyperedge);
}
