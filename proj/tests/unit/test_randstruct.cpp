#include <set>

#include "bigramsey/devlin.hpp"
#include "bigramsey/hyper.hpp"
#include "bigramsey/oracles.hpp"
#include "bigramsey/order_tree.hpp"
#include "bigramsey/randstruct.hpp"
#include "bigramsey/sauer.hpp"
#include "doctest.h"

using namespace bigramsey;

namespace {

bool subset_of(const std::vector<CanonicalCode>& small, const std::vector<CanonicalCode>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Element> prefix(std::size_t n) {
  std::vector<Element> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Element>(i);
  return s;
}

}  // namespace

TEST_CASE("bit-predicate Rado graph") {
  CHECK(rado_graph(2).graph().edges == EdgeSet{{0, 1}});
  CHECK(rado_graph(4).graph().edges == EdgeSet{{0, 1}, {1, 2}, {0, 3}, {1, 3}});
  // Witness for U and its complement V inside {0..k-1}: bits U, plus bit k to
  // place it after the prefix.
  const std::size_t k = 5;
  const auto g = rado_graph(2U << k);
  for (std::uint32_t u = 0; u < (1U << k); ++u) {
    const Element witness = u | 1U << k;
    for (Element i = 0; i < k; ++i) CHECK(g.adjacent(i, witness) == static_cast<bool>(u >> i & 1U));
  }
}

TEST_CASE("bit-predicate 3-uniform hypergraph") {
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(0, 2) == 1);
  CHECK(pair_index(1, 2) == 2);
  CHECK(pair_index(0, 3) == 3);
  CHECK(random_hyper3(3).hypergraph().triples.empty());
  const auto h = random_hyper3(64);
  for (const auto& t : h.hypergraph().triples.items()) {
    CHECK(t[0] < t[1]);
    CHECK(t[1] < t[2]);
  }
  // Odd vertices have bit pair_index(0,1) = 0 set and complete {0,1}.
  CHECK(h.hyperedge(0, 1, 3));
  CHECK(h.hyperedge(0, 1, 5));
  CHECK_FALSE(h.hyperedge(0, 1, 4));
}

TEST_CASE("S-types") {
  const auto g = rado_graph(40);
  CHECK(s_types(g, std::vector<Element>{}).size() == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto r = rado_graph((1U << n) + n);
    CHECK(s_types(r, prefix(n)).size() == (1U << n));
  }
  CHECK(s_types(random_hyper3(16), prefix(3)).size() == 8);
  CHECK_THROWS_AS(s_types(g, std::vector<Element>{40}), std::invalid_argument);
}

TEST_CASE("trees of types") {
  const auto g = tree_of_types(rado_graph(70), 6);
  for (std::size_t m = 0; m <= 6; ++m) CHECK(g.level_size(m) == (1U << m));
  const auto h = tree_of_types(random_hyper3(128), 4);
  const std::size_t sizes[] = {1, 1, 2, 8, 64};
  for (std::size_t m = 0; m <= 4; ++m) CHECK(h.level_size(m) == sizes[m]);

  // Children refine parents; each vertex sits in the deepest node it belongs to.
  for (const auto& node : h.nodes) {
    if (node.level == 0) continue;
    const auto& parent = h.nodes[node.parent];
    CHECK(parent.level + 1 == node.level);
    CHECK(std::includes(parent.members.begin(), parent.members.end(), node.members.begin(), node.members.end()));
  }
  for (Element v = 0; v < 128; ++v) {
    const auto& node = h.nodes[h.node_of_vertex[v]];
    CHECK(node.level == std::min<std::size_t>(v, 4));
    CHECK(std::binary_search(node.members.begin(), node.members.end(), v));
  }
  CHECK_THROWS_AS(tree_of_types(rado_graph(4), 5), std::invalid_argument);
}

TEST_CASE("graph subset shapes") {
  const auto g = rado_graph(8);
  SUBCASE("one vertex") {
    const auto s = shape_of_subset_graph(g, std::vector<Element>{5});
    REQUIRE(s.code.has_value());
    CHECK(decode_sauer(*s.code).size() == 1);
  }
  SUBCASE("vertices 1 and 2") {
    // Types "1" and "01" meet in the empty string, which comes first in ⪯.
    const auto s = shape_of_subset_graph(g, std::vector<Element>{1, 2}, false);
    REQUIRE(s.code.has_value());
    const auto d = decode_devlin(*s.code);
    REQUIRE(d.size() == 3);
    CHECK(d.pre.level(1) == 0);
    // 0-branch first: vertex 2 ("01") is ≤-left of vertex 1 ("1") and inserted later.
    CHECK(d.pre.level(0) > d.pre.level(2));
  }
  SUBCASE("an ancestor type is not an antichain") {
    CHECK(shape_of_subset_graph(g, std::vector<Element>{0, 3}).status == SubsetStatus::not_antichain);
  }
  SUBCASE("bad subsets") {
    CHECK_THROWS_AS(shape_of_subset_graph(g, std::vector<Element>{}), std::invalid_argument);
    CHECK_THROWS_AS(shape_of_subset_graph(g, std::vector<Element>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(shape_of_subset_graph(g, std::vector<Element>{8}), std::invalid_argument);
    CHECK_THROWS_AS(shape_of_subset_graph(random_hyper3(8), std::vector<Element>{1}), std::invalid_argument);
  }
}

TEST_CASE("extracted graph shapes are compatible") {
  const auto g = rado_graph(40);
  std::size_t ok = 0;
  for (Element a = 0; a < 40; a += 3) {
    for (Element b = a + 1; b < 40; b += 2) {
      for (Element c = b + 1; c < 40; c += 5) {
        const auto s = shape_of_subset_graph(g, std::vector<Element>{a, b, c});
        if (!s.code) continue;
        ++ok;
        const auto shape = decode_sauer(*s.code);
        REQUIRE(is_compatible_pair(shape.leq, shape.pre));
        const auto tree = tree_from_orders(shape.leq, shape.pre);
        CHECK(graph_compatible(*tree, shape.pre, tree->leaves(), shape.edges));
      }
    }
  }
  CHECK(ok > 0);
}

TEST_CASE("realized Devlin shapes") {
  const auto n2 = enumerate_devlin(2).codes;
  CHECK(realized_shapes(Family::devlin, 2, 3).codes.size() == 1);
  CHECK(realized_shapes(Family::devlin, 2, 4).codes == n2);
  const auto r3 = realized_shapes(Family::devlin, 3, 64);
  CHECK(r3.codes == enumerate_devlin(3).codes);
  CHECK_FALSE(r3.truncated);
  CHECK(r3.examined == 41664);
}

TEST_CASE("realized Sauer shapes") {
  const auto r = realized_shapes(Family::sauer, 2, 256);
  CHECK(r.codes.size() == 4);
  CHECK(r.codes == catalog_union(Family::sauer, 2));
  CHECK(subset_of(realized_shapes(Family::sauer, 3, 48).codes, catalog_union(Family::sauer, 3)));
}

TEST_CASE("realized hypergraph shapes") {
  for (auto reading : {TieReading::literal, TieReading::strict}) {
    SurveyOptions options;
    options.reading = reading;
    EnumerationOptions catalog;
    catalog.reading = reading;
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = realized_shapes(Family::hyper, n, 40, options);
      CHECK(subset_of(r.codes, catalog_union(Family::hyper, n, catalog)));
      CHECK_FALSE(r.codes.empty());
    }
  }
}

TEST_CASE("sampling is reproducible and flagged") {
  SurveyOptions options;
  options.budget = 500;
  options.seed = 42;
  const auto a = realized_shapes(Family::sauer, 3, 100, options);
  options.jobs = 2;
  const auto b = realized_shapes(Family::sauer, 3, 100, options);
  CHECK(a.truncated);
  CHECK(a.examined == 500);
  CHECK(a.codes == b.codes);
  CHECK(subset_of(a.codes, catalog_union(Family::sauer, 3)));
  CHECK_THROWS_AS(realized_shapes(Family::devlin, 5, 4), std::invalid_argument);
}
