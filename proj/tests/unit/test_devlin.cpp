#include <set>

#include "bigramsey/devlin.hpp"
#include "bigramsey/errors.hpp"
#include "bigramsey/oracles.hpp"
#include "bigramsey/order_tree.hpp"
#include "doctest.h"

using namespace bigramsey;

TEST_CASE("full binary trees follow the Catalan numbers") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t leaves = 1; leaves <= 7; ++leaves) {
    const auto trees = full_binary_trees(leaves);
    CHECK(trees.size() == catalan[leaves - 1]);
    for (const auto& t : trees) {
      CHECK(t.size() == 2 * leaves - 1);
      for (Element e = 0; e < t.size(); ++e) CHECK(t.is_leaf(e) == (e % 2 == 0));
    }
  }
  CHECK_THROWS(full_binary_trees(0));
}

TEST_CASE("linear extensions are generated in lexicographic order") {
  const auto trees = full_binary_trees(3);
  for (const auto& t : trees) {
    std::vector<std::vector<Element>> seen;
    for_each_linear_extension(t, [&](std::span<const Element> s) { seen.emplace_back(s.begin(), s.end()); });
    CHECK(seen.size() == 8);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(count_linear_extensions(t) == 8);
  }
}

TEST_CASE("hook oracle examples") {
  CHECK(hook_count_oracle(2) == 2);
  CHECK(hook_count_oracle(3) == 16);
  CHECK(hook_count_oracle(4) == 272);
  // Five trees on 7 nodes: four with 48 extensions, one with 80.
  std::multiset<std::uint64_t> per_tree;
  for (const auto& t : full_binary_trees(4)) per_tree.insert(count_linear_extensions(t));
  CHECK(per_tree == std::multiset<std::uint64_t>{48, 48, 48, 48, 80});
}

TEST_CASE("tangent numbers") {
  const std::uint64_t expected[] = {1, 2, 16, 272, 7936, 353792, 22368256};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(tangent_number(n) == expected[n - 1]);
  for (std::size_t n = 8; n <= 10; ++n) CHECK(tangent_number(n) == hook_count_oracle(n));
  CHECK_THROWS_AS(tangent_number(0), std::invalid_argument);
}

TEST_CASE("Devlin counts in full and count-only mode") {
  const std::uint64_t expected[] = {1, 2, 16, 272, 7936};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto full = enumerate_devlin(n);
    CHECK(full.retained);
    CHECK(full.count == expected[n - 1]);
    CHECK(full.codes.size() == expected[n - 1]);
    CHECK(std::is_sorted(full.codes.begin(), full.codes.end()));
    EnumerationOptions count_only;
    count_only.mode = Mode::count_only;
    count_only.jobs = 2;
    const auto counted = enumerate_devlin(n, count_only);
    CHECK_FALSE(counted.retained);
    CHECK(counted.count == full.count);
  }
  CHECK_THROWS_AS(enumerate_devlin(0), std::invalid_argument);
}

TEST_CASE("every emitted shape is a compatible pair, every tree is reached") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<Element>> parents;
    for (const auto& code : enumerate_devlin(n).codes) {
      const auto shape = decode_devlin(code);
      REQUIRE(is_compatible_pair(shape.leq, shape.pre));
      const auto tree = tree_from_orders(shape.leq, shape.pre);
      std::vector<Element> p;
      for (Element e = 0; e < tree->size(); ++e) p.push_back(tree->parent(e));
      parents.insert(p);
    }
    CHECK(parents.size() == full_binary_trees(n).size());
  }
}

TEST_CASE("cap is enforced in full mode") {
  EnumerationOptions options;
  options.cap = 100;
  CHECK_THROWS_AS(enumerate_devlin(4, options), ResourceLimitExceeded);
  options.mode = Mode::count_only;
  CHECK(enumerate_devlin(4, options).count == 272);
}

TEST_CASE("parallel and sequential catalogs coincide") {
  EnumerationOptions parallel;
  parallel.jobs = 3;
  CHECK(enumerate_devlin(5, parallel).codes == enumerate_devlin(5).codes);
}

TEST_CASE("brute force over all order pairs agrees") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(brute_force_devlin(n).codes == enumerate_devlin(n).codes);
  CHECK_THROWS_AS(brute_force_devlin(5), std::invalid_argument);
}
