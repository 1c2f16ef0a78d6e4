#include "bigramsey/sauer.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "bigramsey/devlin.hpp"
#include "bigramsey/errors.hpp"
#include "bigramsey/parallel.hpp"

namespace bigramsey {

namespace {

void require_leaf_set(const OrderTree& tree, std::span<const Element> vertices, const char* who) {
  std::vector<Element> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != tree.leaves()) throw std::invalid_argument(std::string(who) + ": vertex set is not the leaf set");
}

}  // namespace

bool graph_compatible(const OrderTree& tree, const WellPreorder& pre, std::span<const Element> vertices,
                      const EdgeSet& edges) {
  require_leaf_set(tree, vertices, "graph_compatible");
  const AdjacencyMatrix adj(tree.size(), edges);
  for (Element a : vertices) {
    for (Element b : vertices) {
      if (b <= a) continue;
      const Element m = meet(tree, a, b);
      for (Element c : vertices) {
        if (c == a || c == b || !pre.precedes_or_ties(c, m)) continue;
        if (adj(a, c) != adj(b, c)) return false;
      }
    }
  }
  return true;
}

Catalog enumerate_sauer(const Graph& graph, const EnumerationOptions& options) {
  const std::size_t n = graph.vertex_count;
  if (n == 0) throw std::invalid_argument("enumerate_sauer: graph needs at least one vertex");
  const auto trees = full_binary_trees(n);

  std::vector<std::vector<CanonicalCode>> per_tree(trees.size());
  std::atomic<std::size_t> retained{0};
  parallel_for(trees.size(), options.jobs, [&](std::size_t i) {
    const auto& shape_tree = trees[i];
    std::vector<Element> leaves;
    for (Element e = 0; e < shape_tree.size(); e += 2) leaves.push_back(e);
    auto& out = per_tree[i];
    for_each_linear_extension(shape_tree, [&](std::span<const Element> order) {
      const auto base = devlin_shape(shape_tree, order);
      const auto tree = tree_from_orders(base.leq, base.pre);
      if (!tree) throw InvariantViolation("sauer: enumerated orders do not form a tree");
      std::vector<Element> assignment(n);
      std::iota(assignment.begin(), assignment.end(), 0);
      do {
        std::vector<Element> image(n);
        for (std::size_t v = 0; v < n; ++v) image[v] = leaves[assignment[v]];
        auto edges = graph.edges.mapped(image);
        if (graph_compatible(*tree, base.pre, leaves, edges)) {
          out.push_back(canonical_code_unchecked(SauerShape{base.leq, base.pre, std::move(edges)}));
        }
      } while (std::next_permutation(assignment.begin(), assignment.end()));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (options.mode == Mode::full && retained.fetch_add(out.size()) + out.size() > options.cap) {
      throw ResourceLimitExceeded("sauer: more than " + std::to_string(options.cap) + " shapes");
    }
  });

  Catalog catalog;
  catalog.family = Family::sauer;
  catalog.n = n;
  catalog.input = structure_text(graph);
  catalog.retained = options.mode == Mode::full;
  catalog.settings["mode"] = catalog.retained ? "full" : "count_only";
  std::vector<CanonicalCode> all;
  for (auto& codes : per_tree) all.insert(all.end(), codes.begin(), codes.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  catalog.count = all.size();
  if (catalog.retained) catalog.codes = std::move(all);
  return catalog;
}

}  // namespace bigramsey
