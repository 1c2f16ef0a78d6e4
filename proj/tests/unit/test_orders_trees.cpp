#include <random>
#include <set>

#include "bigramsey/order_tree.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bigramsey;
using bigramsey::testing::bst_parents;
using bigramsey::testing::random_permutation;

namespace {

OrderTree build(std::vector<Element> leq_sequence, std::vector<Element> pre_sequence) {
  auto t = tree_from_orders(LinearOrder::from_sequence(leq_sequence), WellPreorder::from_sequence(pre_sequence));
  REQUIRE(t.has_value());
  return *t;
}

// Checks the tree axioms directly on the ancestor relation.
void check_tree_axioms(const OrderTree& t) {
  const auto n = t.size();
  std::size_t roots = 0;
  for (Element a = 0; a < n; ++a) {
    CHECK(t.is_ancestor(a, a));
    if (t.parent(a) == kNoElement) {
      ++roots;
      CHECK(a == t.root());
    } else {
      CHECK(t.is_strict_ancestor(t.parent(a), a));
    }
    CHECK(t.is_ancestor(t.root(), a));
    for (Element b = 0; b < n; ++b) {
      if (a != b && t.is_ancestor(a, b)) CHECK_FALSE(t.is_ancestor(b, a));
      for (Element c = 0; c < n; ++c) {
        if (t.is_ancestor(a, b) && t.is_ancestor(b, c)) CHECK(t.is_ancestor(a, c));
        // Down-sets are chains.
        if (t.is_ancestor(a, c) && t.is_ancestor(b, c)) CHECK((t.is_ancestor(a, b) || t.is_ancestor(b, a)));
      }
      // The parent is the greatest strict ancestor.
      if (t.is_strict_ancestor(b, a)) CHECK(t.is_ancestor(b, t.parent(a)));
    }
  }
  CHECK(roots == 1);
}

}  // namespace

TEST_CASE("linear orders and preorders") {
  const auto l = LinearOrder::from_sequence(std::vector<Element>{2, 0, 1});
  CHECK(l.rank(2) == 0);
  CHECK(l.at(2) == 1);
  CHECK(l.less(0, 1));
  CHECK_THROWS_AS(LinearOrder(std::vector<std::uint32_t>{0, 0}), std::invalid_argument);
  const WellPreorder p(std::vector<std::uint32_t>{3, 3, 7});
  CHECK(p.tied(0, 1));
  CHECK(p.strictly_precedes(1, 2));
  CHECK_FALSE(p.is_linear());
  CHECK(p.densified().levels()[2] == 1);
}

TEST_CASE("tree_from_orders examples") {
  SUBCASE("single element") {
    const auto t = build({0}, {0});
    CHECK(t.size() == 1);
    CHECK(t.root() == 0);
    CHECK(t.is_leaf(0));
  }
  SUBCASE("insertion 1,0,2 gives a cherry") {
    const auto t = build({0, 1, 2}, {1, 0, 2});
    CHECK(t.root() == 1);
    CHECK(t.parent(0) == 1);
    CHECK(t.parent(2) == 1);
    CHECK(t.children(1).size() == 2);
  }
  SUBCASE("increasing insertion gives a chain") {
    const auto t = build({0, 1, 2}, {0, 1, 2});
    CHECK(t.parent(1) == 0);
    CHECK(t.parent(2) == 1);
    CHECK(t.is_ancestor(0, 2));
  }
  SUBCASE("tied neighbours are undefined") {
    const auto t = tree_from_orders(LinearOrder::identity(2), WellPreorder(std::vector<std::uint32_t>{0, 0}));
    CHECK_FALSE(t.has_value());
  }
  SUBCASE("ties separated by an earlier element are fine") {
    const auto t = tree_from_orders(LinearOrder::identity(3), WellPreorder(std::vector<std::uint32_t>{1, 0, 1}));
    REQUIRE(t.has_value());
    CHECK(t->root() == 1);
    CHECK(t->parent(0) == 1);
    CHECK(t->parent(2) == 1);
  }
  SUBCASE("empty ground set") {
    CHECK_FALSE(tree_from_orders(LinearOrder::identity(0), WellPreorder()).has_value());
  }
  SUBCASE("size mismatch throws") {
    CHECK_THROWS_AS(tree_from_orders(LinearOrder::identity(2), WellPreorder::from_sequence(std::vector<Element>{0})),
                    std::invalid_argument);
  }
}

TEST_CASE("meet examples") {
  const auto cherry = build({0, 1, 2}, {1, 0, 2});
  CHECK(meet(cherry, 0, 0) == 0);
  CHECK(meet(cherry, 0, 2) == 1);
  const auto chain = build({0, 1, 2}, {0, 1, 2});
  CHECK(meet(chain, 1, 2) == 1);
}

TEST_CASE("generated_subtree examples") {
  const auto cherry = build({0, 1, 2}, {1, 0, 2});
  CHECK(generated_subtree(cherry, std::vector<Element>{2}).elements == std::vector<Element>{2});
  const auto g = generated_subtree(cherry, std::vector<Element>{0, 2});
  CHECK(g.elements == std::vector<Element>{0, 1, 2});
  CHECK(g.strict_ancestry.size() == 2);
  CHECK(g.contains(1));

  // Perfect tree on 7 nodes: 3; 1, 5; 0, 2, 4, 6.
  const auto perfect = build({0, 1, 2, 3, 4, 5, 6}, {3, 1, 5, 0, 2, 4, 6});
  CHECK(generated_subtree(perfect, std::vector<Element>{0, 2, 4, 6}).elements.size() == 7);
  CHECK(generated_subtree(perfect, std::vector<Element>{0, 6}).elements == std::vector<Element>{0, 3, 6});
  CHECK_THROWS_AS(generated_subtree(perfect, std::vector<Element>{}), std::invalid_argument);
  CHECK_THROWS_AS(generated_subtree(perfect, std::vector<Element>{7}), std::invalid_argument);
}

TEST_CASE("compatible pair examples") {
  CHECK(is_compatible_pair(LinearOrder::identity(1), WellPreorder::from_sequence(std::vector<Element>{0})));
  CHECK(is_compatible_pair(LinearOrder::identity(3), WellPreorder::from_sequence(std::vector<Element>{1, 0, 2})));
  CHECK_FALSE(is_compatible_pair(LinearOrder::identity(3), WellPreorder::from_sequence(std::vector<Element>{0, 1, 2})));
}

TEST_CASE("random orders: tree axioms and binary search tree equivalence") {
  std::mt19937_64 rng(20240501);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const auto sigma = random_permutation(n, rng);
    const auto tau = random_permutation(n, rng);
    const auto leq = LinearOrder::from_sequence(sigma);
    const auto t = tree_from_orders(leq, WellPreorder::from_sequence(tau));
    if (!t) {
      ++failures;
      continue;
    }
    std::vector<std::uint32_t> rank(leq.ranks().begin(), leq.ranks().end());
    const auto expected = bst_parents(rank, tau);
    for (Element e = 0; e < n; ++e) failures += t->parent(e) != expected[e];
    if (trial % 50 == 0) check_tree_axioms(*t);
  }
  CHECK(failures == 0);
}

TEST_CASE("random preorders with ties: defined trees satisfy the axioms") {
  std::mt19937_64 rng(7);
  int defined = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::vector<std::uint32_t> levels(n);
    for (auto& l : levels) l = std::uniform_int_distribution<std::uint32_t>(0, 3)(rng);
    const auto t = tree_from_orders(LinearOrder::from_sequence(random_permutation(n, rng)), WellPreorder(levels));
    if (!t) continue;
    ++defined;
    check_tree_axioms(*t);
  }
  CHECK(defined > 100);
}

TEST_CASE("meet laws on random trees") {
  std::mt19937_64 rng(99);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 15)(rng);
    const auto t = tree_from_orders(LinearOrder::from_sequence(random_permutation(n, rng)),
                                    WellPreorder::from_sequence(random_permutation(n, rng)));
    REQUIRE(t.has_value());
    for (Element a = 0; a < n; ++a) {
      failures += meet(*t, a, a) != a;
      for (Element b = 0; b < n; ++b) {
        const auto m = meet(*t, a, b);
        failures += m != meet(*t, b, a);
        failures += !t->is_ancestor(m, a) || !t->is_ancestor(m, b);
        for (Element c = 0; c < n; ++c) {
          if (t->is_ancestor(c, a) && t->is_ancestor(c, b)) failures += !t->is_ancestor(c, m);
        }
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("generated subtrees are the least meet-closed supersets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const auto t = tree_from_orders(LinearOrder::from_sequence(random_permutation(n, rng)),
                                    WellPreorder::from_sequence(random_permutation(n, rng)));
    REQUIRE(t.has_value());
    std::vector<Element> seeds;
    for (Element e = 0; e < n; ++e) {
      if (rng() % 3 == 0) seeds.push_back(e);
    }
    if (seeds.empty()) seeds.push_back(0);
    const auto g = generated_subtree(*t, seeds);
    CHECK(g.elements.size() <= 2 * seeds.size() - 1);
    for (Element a : g.elements) {
      for (Element b : g.elements) CHECK(g.contains(meet(*t, a, b)));
    }
    // Every element beyond the seeds is a meet of two seeds.
    for (Element x : g.elements) {
      bool reached = std::find(seeds.begin(), seeds.end(), x) != seeds.end();
      for (Element a : seeds) {
        for (Element b : seeds) reached = reached || meet(*t, a, b) == x;
      }
      CHECK(reached);
    }
  }
}

TEST_CASE("compatible pairs have odd size and (m+1)/2 leaves") {
  std::mt19937_64 rng(11);
  int compatible = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    const auto leq = LinearOrder::from_sequence(random_permutation(n, rng));
    const auto pre = WellPreorder::from_sequence(random_permutation(n, rng));
    if (!is_compatible_pair(leq, pre)) continue;
    ++compatible;
    CHECK(n % 2 == 1);
    CHECK(tree_from_orders(leq, pre)->leaves().size() == (n + 1) / 2);
  }
  CHECK(compatible > 0);
}
