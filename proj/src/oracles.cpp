#include "bigramsey/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bigramsey/devlin.hpp"
#include "bigramsey/hyper.hpp"
#include "bigramsey/order_tree.hpp"
#include "bigramsey/sauer.hpp"

namespace bigramsey {

namespace {

Catalog finish(Family family, std::size_t n, std::vector<CanonicalCode> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  Catalog c;
  c.family = family;
  c.n = n;
  c.retained = true;
  c.count = codes.size();
  c.codes = std::move(codes);
  c.settings["mode"] = "brute_force";
  return c;
}

// Calls visit(leq, pre, tree) for every pair of linear orders on m elements
// forming a compatible pair.
void for_each_compatible_pair(std::size_t m,
                              const std::function<void(const LinearOrder&, const WellPreorder&, const OrderTree&)>& visit) {
  std::vector<Element> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const auto leq = LinearOrder::from_sequence(sigma);
    std::vector<Element> tau(m);
    std::iota(tau.begin(), tau.end(), 0);
    do {
      const auto pre = WellPreorder::from_sequence(tau);
      const auto tree = tree_from_orders(leq, pre);
      if (tree && is_full_binary(*tree)) visit(leq, pre, *tree);
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// Every injective labelling of n structure vertices onto the leaves.
void for_each_labelling(const std::vector<Element>& leaves,
                        const std::function<void(const std::vector<Element>&)>& visit) {
  std::vector<Element> image = leaves;
  std::sort(image.begin(), image.end());
  do {
    visit(image);
  } while (std::next_permutation(image.begin(), image.end()));
}

}  // namespace

Catalog brute_force_devlin(std::size_t n) {
  if (n == 0 || n > 4) throw std::invalid_argument("brute_force_devlin: n must be in 1..4");
  std::vector<CanonicalCode> codes;
  for_each_compatible_pair(2 * n - 1, [&](const LinearOrder& leq, const WellPreorder& pre, const OrderTree&) {
    codes.push_back(canonical_code(DevlinShape{leq, pre}));
  });
  return finish(Family::devlin, n, std::move(codes));
}

Catalog brute_force_sauer(const Graph& graph) {
  const auto n = graph.vertex_count;
  if (n == 0 || n > 4) throw std::invalid_argument("brute_force_sauer: graph must have 1..4 vertices");
  std::vector<CanonicalCode> codes;
  for_each_compatible_pair(2 * n - 1, [&](const LinearOrder& leq, const WellPreorder& pre, const OrderTree& tree) {
    const auto leaves = tree.leaves();
    for_each_labelling(leaves, [&](const std::vector<Element>& image) {
      auto edges = graph.edges.mapped(image);
      if (graph_compatible(tree, pre, leaves, edges)) codes.push_back(canonical_code(SauerShape{leq, pre, std::move(edges)}));
    });
  });
  auto c = finish(Family::sauer, n, std::move(codes));
  c.input = structure_text(graph);
  return c;
}

namespace {

// Weak orders on V0 ∪ V1 keeping the given strict order on V0. Blocks are
// pruned only by the tie and projection clauses of condition (4).
class WeakOrderSearch {
 public:
  WeakOrderSearch(HyperShape& shape, const std::vector<Element>& order0, const std::vector<Element>& proj,
                  TieReading reading, std::vector<CanonicalCode>& out)
      : shape_(shape), order0_(order0), proj_(proj), reading_(reading), out_(out) {
    levels_.assign(shape.universe(), kUnplaced);
  }

  void run() { step(0, 0); }

 private:
  static constexpr std::uint32_t kUnplaced = std::numeric_limits<std::uint32_t>::max();

  bool block_allowed(const std::vector<Element>& block) const {
    // Ties need equal, defined projections.
    if (block.size() > 1) {
      for (Element e : block) {
        if (proj_[e] == kNoElement || proj_[e] != proj_[block.front()]) return false;
      }
    }
    const Element p = proj_[block.front()];
    if (p == kNoElement) return true;
    // Elements with ⪯-smaller projections are already placed; under the
    // literal reading so is nothing else with the same projection.
    for (Element e = 0; e < levels_.size(); ++e) {
      if (proj_[e] == kNoElement || levels_[e] != kUnplaced) continue;
      if (std::find(block.begin(), block.end(), e) != block.end()) continue;
      if (reading_ == TieReading::literal && proj_[e] == p) return false;
      if (position0(proj_[e]) < position0(p)) return false;
    }
    return true;
  }

  std::uint32_t position0(Element e) const {
    return static_cast<std::uint32_t>(std::find(order0_.begin(), order0_.end(), e) - order0_.begin());
  }

  void step(std::size_t next0, std::uint32_t level) {
    std::vector<Element> free1;
    for (Element e : shape_.v1) {
      if (levels_[e] == kUnplaced) free1.push_back(e);
    }
    if (next0 == order0_.size() && free1.empty()) {
      shape_.pre = WellPreorder(levels_);
      if (check_hyper_shape(shape_, reading_).ok()) out_.push_back(canonical_code(shape_));
      return;
    }
    for (std::uint32_t mask = 0; mask < (1U << free1.size()); ++mask) {
      for (int with0 = 0; with0 < 2; ++with0) {
        if (with0 && next0 == order0_.size()) continue;
        std::vector<Element> block;
        if (with0) block.push_back(order0_[next0]);
        for (std::size_t k = 0; k < free1.size(); ++k) {
          if (mask >> k & 1) block.push_back(free1[k]);
        }
        if (block.empty() || !block_allowed(block)) continue;
        for (Element e : block) levels_[e] = level;
        step(next0 + with0, level + 1);
        for (Element e : block) levels_[e] = kUnplaced;
      }
    }
  }

  HyperShape& shape_;
  const std::vector<Element>& order0_;
  const std::vector<Element>& proj_;
  TieReading reading_;
  std::vector<CanonicalCode>& out_;
  std::vector<std::uint32_t> levels_;
};

}  // namespace

Catalog brute_force_hyper(const Hypergraph3& hypergraph, TieReading reading) {
  const auto n = hypergraph.vertex_count;
  if (n == 0 || n > 3) throw std::invalid_argument("brute_force_hyper: hypergraph must have 1..3 vertices");
  const std::size_t m0 = 2 * n - 1;
  std::vector<CanonicalCode> codes;
  const auto leq0 = LinearOrder::identity(m0);
  std::vector<Element> order0(m0);
  std::iota(order0.begin(), order0.end(), 0);
  do {
    const auto pre0 = WellPreorder::from_sequence(order0);
    const auto tree0 = tree_from_orders(leq0, pre0);
    if (!tree0 || !is_full_binary(*tree0)) continue;
    const auto leaves = tree0->leaves();
    for_each_labelling(leaves, [&](const std::vector<Element>& image) {
      const auto triples = hypergraph.triples.mapped(image);
      if (!hypergraph_compatible(*tree0, pre0, leaves, triples)) return;
      const auto pairs = neighbourhood_vertices(*tree0, pre0);
      const std::size_t m1 = pairs.empty() ? 0 : 2 * pairs.size() - 1;

      HyperShape shape;
      for (Element e = 0; e < m0; ++e) shape.v0.push_back(e);
      for (Element e = 0; e < m1; ++e) shape.v1.push_back(static_cast<Element>(m0 + e));
      shape.triples = triples;
      shape.pre = WellPreorder(std::vector<std::uint32_t>(m0 + m1, 0));

      // slot[k] = position in ≤1 of pair k; every injective choice.
      std::vector<std::uint32_t> positions(m1);
      std::iota(positions.begin(), positions.end(), 0);
      std::vector<std::vector<std::uint32_t>> placements;
      std::function<void(std::vector<std::uint32_t>&, std::uint32_t)> choose = [&](std::vector<std::uint32_t>& slot,
                                                                                   std::uint32_t used) {
        if (slot.size() == pairs.size()) {
          placements.push_back(slot);
          return;
        }
        for (std::uint32_t p = 0; p < m1; ++p) {
          if (used >> p & 1) continue;
          slot.push_back(p);
          choose(slot, used | 1U << p);
          slot.pop_back();
        }
      };
      std::vector<std::uint32_t> slot;
      choose(slot, 0);

      for (const auto& place : placements) {
        shape.links.clear();
        std::vector<Element> proj(m0 + m1, kNoElement);
        for (Element leaf : leaves) proj[leaf] = leaf;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          const Element v = static_cast<Element>(m0 + place[k]);
          shape.links.push_back({pairs[k].leaf, pairs[k].node, v});
          proj[v] = pairs[k].leaf;
        }
        WeakOrderSearch(shape, order0, proj, reading, codes).run();
      }
    });
  } while (std::next_permutation(order0.begin(), order0.end()));
  auto c = finish(Family::hyper, n, std::move(codes));
  c.input = structure_text(hypergraph);
  c.settings["tie_reading"] = to_string(reading);
  return c;
}

std::vector<CanonicalCode> catalog_union(Family family, std::size_t n, const EnumerationOptions& options) {
  auto full = options;
  full.mode = Mode::full;
  std::vector<CanonicalCode> all;
  auto absorb = [&](const Catalog& c) { all.insert(all.end(), c.codes.begin(), c.codes.end()); };
  switch (family) {
    case Family::devlin:
      absorb(enumerate_devlin(n, full));
      break;
    case Family::sauer: {
      if (n == 0 || n > 4) throw std::invalid_argument("catalog_union: sauer needs 1..4 vertices");
      std::vector<Edge> pairs;
      for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) pairs.push_back({a, b});
      }
      for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          if (mask >> k & 1U) edges.push_back(pairs[k]);
        }
        absorb(enumerate_sauer(Graph::make(n, EdgeSet(std::move(edges))), full));
      }
      break;
    }
    case Family::hyper: {
      if (n == 0 || n > 3) throw std::invalid_argument("catalog_union: hyper needs 1..3 vertices");
      absorb(enumerate_hyper(Hypergraph3::empty(n), full));
      if (n == 3) absorb(enumerate_hyper(Hypergraph3::make(3, TripleSet{{0, 1, 2}}), full));
      break;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace bigramsey
