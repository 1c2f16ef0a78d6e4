#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bigramsey/binary_trees.hpp"
#include "bigramsey/devlin.hpp"
#include "bigramsey/structures.hpp"

namespace bigramsey::testing {

inline std::vector<Element> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Uniform among full binary trees with the given leaf count, then a random
/// insertion order obtained by repeatedly picking an available node.
inline DevlinShape random_devlin_shape(std::size_t leaves, std::mt19937_64& rng) {
  const auto trees = full_binary_trees(leaves);
  const auto& tree = trees[std::uniform_int_distribution<std::size_t>(0, trees.size() - 1)(rng)];
  std::vector<Element> order;
  std::vector<Element> available{tree.root};
  while (!available.empty()) {
    const auto k = std::uniform_int_distribution<std::size_t>(0, available.size() - 1)(rng);
    const Element e = available[k];
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(k));
    order.push_back(e);
    if (!tree.is_leaf(e)) {
      available.push_back(tree.left[e]);
      available.push_back(tree.right[e]);
    }
  }
  return devlin_shape(tree, order);
}

/// Every labelled graph on n vertices.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1U) edges.push_back(pairs[k]);
    }
    out.push_back(Graph::make(n, EdgeSet(std::move(edges))));
  }
  return out;
}

/// Every labelled 3-uniform hypergraph on n vertices.
inline std::vector<Hypergraph3> all_hypergraphs(std::size_t n) {
  std::vector<Triple> triples;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      for (Element c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    }
  }
  std::vector<Hypergraph3> out;
  for (std::uint32_t mask = 0; mask < (1U << triples.size()); ++mask) {
    std::vector<Triple> chosen;
    for (std::size_t k = 0; k < triples.size(); ++k) {
      if (mask >> k & 1U) chosen.push_back(triples[k]);
    }
    out.push_back(Hypergraph3::make(n, TripleSet(std::move(chosen))));
  }
  return out;
}

/// Parent array of the binary search tree built by inserting keys in the
/// given order, keys compared by `rank`.
inline std::vector<Element> bst_parents(const std::vector<std::uint32_t>& rank, const std::vector<Element>& insertion) {
  const auto n = rank.size();
  std::vector<Element> parent(n, kNoElement), left(n, kNoElement), right(n, kNoElement);
  if (insertion.empty()) return parent;
  const Element root = insertion.front();
  for (std::size_t i = 1; i < insertion.size(); ++i) {
    const Element x = insertion[i];
    Element at = root;
    for (;;) {
      auto& slot = rank[x] < rank[at] ? left[at] : right[at];
      if (slot == kNoElement) {
        slot = x;
        parent[x] = at;
        break;
      }
      at = slot;
    }
  }
  return parent;
}

}  // namespace bigramsey::testing
