#include "bigramsey/hyper.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "bigramsey/binary_trees.hpp"
#include "bigramsey/devlin.hpp"
#include "bigramsey/parallel.hpp"
#include "bigramsey/sauer.hpp"

namespace bigramsey {

bool hypergraph_compatible(const OrderTree& tree, const WellPreorder& pre, std::span<const Element> vertices,
                           const TripleSet& triples) {
  std::vector<Element> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != tree.leaves()) throw std::invalid_argument("hypergraph_compatible: vertex set is not the leaf set");
  if (sorted.size() < 4) return true;
  const TripleMatrix has(tree.size(), triples);
  for (Element a : sorted) {
    for (Element b : sorted) {
      if (b <= a) continue;
      const Element m = meet(tree, a, b);
      for (Element c : sorted) {
        if (c == a || c == b || !pre.precedes_or_ties(c, m)) continue;
        for (Element d : sorted) {
          if (d == a || d == b || d == c || !pre.precedes_or_ties(d, c)) continue;
          if (has(a, c, d) != has(b, c, d)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<PairVertex> neighbourhood_vertices(const OrderTree& tree, const WellPreorder& pre) {
  std::vector<PairVertex> out;
  for (Element a = 0; a < tree.size(); ++a) {
    if (!tree.is_leaf(a)) continue;
    for (Element b = 0; b < tree.size(); ++b) {
      if (!pre.strictly_precedes(a, b)) continue;
      bool separated = false;
      for (Element c = tree.parent(b); c != kNoElement && !separated; c = tree.parent(c)) {
        separated = pre.strictly_precedes(a, c) && pre.strictly_precedes(c, b);
      }
      if (!separated) out.push_back({a, b});
    }
  }
  return out;
}

NeighbourhoodGraph neighbourhood_graph(const OrderTree& tree, const WellPreorder& pre, const TripleSet& triples) {
  NeighbourhoodGraph g;
  g.vertices = neighbourhood_vertices(tree, pre);
  const TripleMatrix has(tree.size(), triples);
  std::vector<Edge> edges;
  for (Element i = 0; i < g.vertices.size(); ++i) {
    for (Element j = i + 1; j < g.vertices.size(); ++j) {
      auto first = g.vertices[i];
      auto second = g.vertices[j];
      if (!pre.precedes_or_ties(first.leaf, second.leaf)) std::swap(first, second);
      const Element a = first.leaf, c = second.leaf, d = second.node;
      if (a == c) continue;
      int seen = -1;
      for (Element e = 0; e < tree.size(); ++e) {
        if (!tree.is_leaf(e) || !tree.is_ancestor(d, e) || e == a || e == c) continue;
        const int value = has(a, c, e) ? 1 : 0;
        if (seen >= 0 && seen != value) {
          throw AgreementViolation("neighbourhood graph: leaves below node " + std::to_string(d) +
                                   " disagree on hyperedges with " + std::to_string(a) + "," + std::to_string(c));
        }
        seen = value;
      }
      if (seen == 1) edges.push_back({i, j});
    }
  }
  g.edges = EdgeSet(std::move(edges));
  return g;
}

bool HyperShapeCheckReport::violates(int condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const HyperShapeCheckViolation& v) { return v.condition == condition; });
}

namespace {

std::string name(Element e) { return std::to_string(e); }

// Tree on one sort: local index i stands for sort[i], ≤ is listing order.
std::optional<OrderTree> sort_tree(const HyperShape& s, std::span<const Element> sort, WellPreorder& local_pre) {
  std::vector<std::uint32_t> levels;
  levels.reserve(sort.size());
  for (Element e : sort) levels.push_back(s.pre.level(e));
  local_pre = WellPreorder(std::move(levels));
  return tree_from_orders(LinearOrder::identity(sort.size()), local_pre);
}

}  // namespace

HyperShapeCheckReport check_hyper_shape(const HyperShape& s, TieReading reading) {
  HyperShapeCheckReport report;
  auto fail = [&](int condition, std::string detail) { report.violations.push_back({condition, std::move(detail)}); };
  const std::size_t universe = s.universe();

  // (1) the sorts are disjoint and cover the universe.
  std::vector<std::uint8_t> role(universe, 0);
  for (Element e : s.v0) {
    if (e >= universe || (role[e] & 1)) return fail(1, "V0 lists an invalid or repeated element " + name(e)), report;
    role[e] |= 1;
  }
  for (Element e : s.v1) {
    if (e >= universe || (role[e] & 2)) return fail(1, "V1 lists an invalid or repeated element " + name(e)), report;
    role[e] |= 2;
  }
  for (Element e = 0; e < universe; ++e) {
    if (role[e] == 3) fail(1, "element " + name(e) + " lies in both V0 and V1");
    if (role[e] == 0) fail(1, "element " + name(e) + " lies in neither sort");
  }
  if (!report.ok()) return report;

  // (2) tree 0 from a compatible pair, compatible with the hypergraph.
  if (s.v0.empty()) return fail(2, "V0 is empty"), report;
  std::vector<Element> local0(universe, kNoElement), local1(universe, kNoElement);
  for (Element i = 0; i < s.v0.size(); ++i) local0[s.v0[i]] = i;
  for (Element i = 0; i < s.v1.size(); ++i) local1[s.v1[i]] = i;
  WellPreorder pre0;
  const auto t0 = sort_tree(s, s.v0, pre0);
  if (!t0) return fail(2, "T(V0, ≤0, ⪯) is undefined"), report;
  if (!is_full_binary(*t0)) fail(2, "(≤0, ⪯) is not a compatible pair");
  const auto leaves0 = t0->leaves();

  bool triples_ok = true;
  std::vector<Triple> local_triples;
  for (const auto& t : s.triples.items()) {
    Triple lt{};
    for (int k = 0; k < 3; ++k) {
      lt[k] = t[k] < universe ? local0[t[k]] : kNoElement;
      if (lt[k] == kNoElement || !t0->is_leaf(lt[k])) triples_ok = false;
    }
    local_triples.push_back(lt);
  }
  bool graph_ok = false;
  NeighbourhoodGraph g1;
  if (!triples_ok) {
    fail(2, "a hyperedge is not on the leaves of tree 0");
  } else {
    const TripleSet h(std::move(local_triples));
    if (!hypergraph_compatible(*t0, pre0, leaves0, h)) fail(2, "hypergraph is not compatible with tree 0");
    try {
      g1 = neighbourhood_graph(*t0, pre0, h);
      graph_ok = true;
    } catch (const AgreementViolation& e) {
      fail(2, e.what());
    }
  }
  const auto pairs = graph_ok ? g1.vertices : neighbourhood_vertices(*t0, pre0);

  // (3) tree 1 has the pair-vertices as leaves and is compatible with G¹.
  bool links_ok = true;
  std::vector<std::uint32_t> pair_of_local1(s.v1.size(), kNoElement);
  for (const auto& l : s.links) {
    const bool in_sorts = l.leaf < universe && l.node < universe && l.vertex < universe && role[l.leaf] == 1 &&
                          role[l.node] == 1 && role[l.vertex] == 2;
    if (!in_sorts) {
      fail(3, "link {" + name(l.leaf) + "," + name(l.node) + "," + name(l.vertex) + "} leaves its sorts");
      links_ok = false;
      continue;
    }
    const PairVertex p{local0[l.leaf], local0[l.node]};
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
    if (it == pairs.end() || *it != p) {
      fail(3, "pair (" + name(l.leaf) + "," + name(l.node) + ") is not a neighbourhood vertex");
      links_ok = false;
      continue;
    }
    auto& slot = pair_of_local1[local1[l.vertex]];
    if (slot != kNoElement) {
      fail(3, "element " + name(l.vertex) + " carries two pairs");
      links_ok = false;
    }
    slot = static_cast<std::uint32_t>(it - pairs.begin());
  }
  if (links_ok) {
    std::vector<std::uint32_t> used;
    for (auto p : pair_of_local1) {
      if (p != kNoElement) used.push_back(p);
    }
    std::sort(used.begin(), used.end());
    const bool bijective = std::adjacent_find(used.begin(), used.end()) == used.end() && used.size() == pairs.size();
    if (!bijective) {
      fail(3, "linked pairs are not exactly the neighbourhood vertices");
      links_ok = false;
    }
  }

  std::optional<OrderTree> t1;
  WellPreorder pre1;
  if (s.v1.empty()) {
    if (!pairs.empty()) fail(3, "V1 is empty but the neighbourhood graph is not");
  } else {
    t1 = sort_tree(s, s.v1, pre1);
    if (!t1) {
      fail(3, "T(V1, ≤1, ⪯) is undefined");
    } else {
      if (!is_full_binary(*t1)) fail(3, "(≤1, ⪯) is not a compatible pair");
      if (links_ok) {
        std::vector<Element> linked;
        for (Element i = 0; i < s.v1.size(); ++i) {
          if (pair_of_local1[i] != kNoElement) linked.push_back(i);
        }
        if (linked != t1->leaves()) {
          fail(3, "leaves of tree 1 are not exactly the pair-vertices");
        } else if (graph_ok) {
          std::vector<Element> vertex_of_pair(pairs.size());
          for (Element i = 0; i < s.v1.size(); ++i) {
            if (pair_of_local1[i] != kNoElement) vertex_of_pair[pair_of_local1[i]] = i;
          }
          if (!graph_compatible(*t1, pre1, linked, g1.edges.mapped(vertex_of_pair))) {
            fail(3, "tree 1 is not compatible with the neighbourhood graph");
          }
        }
      }
    }
  }

  // (4) ties, projection monotonicity, and the cross-tree meet order.
  std::vector<Element> proj(universe, kNoElement);
  for (Element leaf : leaves0) proj[s.v0[leaf]] = s.v0[leaf];
  if (links_ok) {
    for (const auto& l : s.links) proj[l.vertex] = l.leaf;
  }
  const auto& pre = s.pre;
  bool tie_reported = false, order_reported = false;
  for (Element a = 0; a < universe; ++a) {
    for (Element b = 0; b < universe; ++b) {
      if (a == b) continue;
      const bool both = proj[a] != kNoElement && proj[b] != kNoElement;
      if (!tie_reported && a < b && pre.tied(a, b) && (!both || proj[a] != proj[b])) {
        fail(4, "tied elements " + name(a) + "," + name(b) + " lack equal defined projections");
        tie_reported = true;
      }
      if (!order_reported && both) {
        const bool premise = reading == TieReading::literal ? pre.precedes_or_ties(proj[a], proj[b])
                                                            : pre.strictly_precedes(proj[a], proj[b]);
        if (premise && !pre.precedes_or_ties(a, b)) {
          fail(4, "projection order not respected by " + name(a) + "," + name(b));
          order_reported = true;
        }
      }
    }
  }
  if (links_ok && t1) {
    for (const auto& p : s.links) {
      for (const auto& q : s.links) {
        const Element m1 = s.v1[meet(*t1, local1[p.vertex], local1[q.vertex])];
        const Element m0 = s.v0[meet(*t0, local0[p.node], local0[q.node])];
        if (!pre.strictly_precedes(m1, m0)) {
          fail(4, "meet of " + name(p.vertex) + "," + name(q.vertex) + " does not precede meet of " + name(p.node) +
                      "," + name(q.node));
          return report;
        }
      }
    }
  }
  return report;
}

namespace {

// Searches the ⪯-placements of tree 1 around a fixed tree 0 and collects the
// codes of every candidate passing check_hyper_shape.
class HyperExtensionSearch {
 public:
  HyperExtensionSearch(const std::vector<Element>& order0, const OrderTree& tree0, const TripleSet& triples,
                       const std::vector<PairVertex>& pairs, TieReading reading, std::vector<CanonicalCode>& out)
      : order0_(order0), tree0_(tree0), triples_(triples), pairs_(pairs), reading_(reading), out_(out) {
    size0_ = tree0.size();
    position0_.assign(size0_, 0);
    for (std::uint32_t i = 0; i < order0.size(); ++i) position0_[order0[i]] = i;
  }

  void run() {
    if (pairs_.empty()) {
      HyperShape s;
      s.pre = WellPreorder::from_sequence(order0_);
      for (Element e = 0; e < size0_; ++e) s.v0.push_back(e);
      s.triples = triples_;
      emit(s);
      return;
    }
    for (const auto& shape : full_binary_trees(pairs_.size())) {
      tree1_ = &shape;
      std::vector<Element> perm(pairs_.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        // Leaf slot 2k of tree 1 carries pair perm[k].
        pair_at_.assign(shape.size(), kNoElement);
        for (std::size_t k = 0; k < perm.size(); ++k) pair_at_[2 * k] = perm[k];
        prepare_constraints();
        levels_.assign(size0_ + shape.size(), kUnplaced);
        next0_ = 0;
        level_ = 0;
        place();
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

 private:
  static constexpr std::uint32_t kUnplaced = std::numeric_limits<std::uint32_t>::max();

  Element id1(Element local) const { return static_cast<Element>(size0_ + local); }

  void prepare_constraints() {
    // Pair-vertices grouped by the ⪯-position of their projection.
    by_projection_.assign(size0_, {});
    for (Element x = 0; x < tree1_->size(); ++x) {
      if (pair_at_[x] != kNoElement) by_projection_[position0_[pairs_[pair_at_[x]].leaf]].push_back(x);
    }
  }

  bool available1(Element x) const {
    const Element p = tree1_->parent[x];
    return levels_[id1(x)] == kUnplaced && (p == kNoElement || levels_[id1(p)] != kUnplaced);
  }

  // Every leaf ⪯-before position i and every pair-vertex projecting there is
  // placed. Elements with smaller projections never tie with later ones, so
  // this is necessary under both readings.
  bool projections_before_placed(std::uint32_t i) const {
    for (std::uint32_t p = 0; p < i; ++p) {
      if (tree0_.is_leaf(order0_[p]) && p >= next0_) return false;
      for (Element x : by_projection_[p]) {
        if (levels_[id1(x)] == kUnplaced) return false;
      }
    }
    return true;
  }

  std::vector<Element> available_pairs(std::uint32_t i) const {
    std::vector<Element> ready;
    for (Element x : by_projection_[i]) {
      if (available1(x)) ready.push_back(x);
    }
    return ready;
  }

  void place() {
    const std::size_t size1 = tree1_->size();
    if (next0_ == size0_) {
      bool done = true;
      for (Element x = 0; x < size1 && done; ++x) done = levels_[id1(x)] != kUnplaced;
      if (done) {
        finish();
        return;
      }
    }
    // Next tree-0 element, possibly tied with pair-vertices projecting to it.
    if (next0_ < size0_) {
      const bool leaf = tree0_.is_leaf(order0_[next0_]);
      const auto& group = by_projection_[next0_];
      if (reading_ == TieReading::literal) {
        const auto ready = available_pairs(next0_);
        if (ready.size() == group.size()) put0(ready, (1U << ready.size()) - 1);
      } else if (!leaf || projections_before_placed(next0_)) {
        const auto ready = available_pairs(next0_);
        for (std::uint32_t mask = 0; mask < (1U << ready.size()); ++mask) put0(ready, mask);
      }
    }
    // A tree-1 internal node on its own level.
    for (Element x = 0; x < size1; ++x) {
      if (pair_at_[x] != kNoElement || !available1(x)) continue;
      levels_[id1(x)] = level_++;
      place();
      --level_;
      levels_[id1(x)] = kUnplaced;
    }
    if (reading_ == TieReading::literal) return;
    // Strict reading: pair-vertices of one projection on a level of their own.
    for (std::uint32_t i = 0; i < size0_; ++i) {
      if (by_projection_[i].empty() || !projections_before_placed(i)) continue;
      const auto ready = available_pairs(i);
      for (std::uint32_t mask = 1; mask < (1U << ready.size()); ++mask) {
        for (std::size_t k = 0; k < ready.size(); ++k) {
          if (mask >> k & 1) levels_[id1(ready[k])] = level_;
        }
        ++level_;
        place();
        --level_;
        for (std::size_t k = 0; k < ready.size(); ++k) {
          if (mask >> k & 1) levels_[id1(ready[k])] = kUnplaced;
        }
      }
    }
  }

  void put0(const std::vector<Element>& group, std::uint32_t mask) {
    const Element e = order0_[next0_];
    levels_[e] = level_;
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (mask >> k & 1) levels_[id1(group[k])] = level_;
    }
    ++next0_;
    ++level_;
    place();
    --level_;
    --next0_;
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (mask >> k & 1) levels_[id1(group[k])] = kUnplaced;
    }
    levels_[e] = kUnplaced;
  }

  void finish() {
    HyperShape s;
    s.pre = WellPreorder(levels_);
    for (Element e = 0; e < size0_; ++e) s.v0.push_back(e);
    for (Element x = 0; x < tree1_->size(); ++x) {
      s.v1.push_back(id1(x));
      if (pair_at_[x] != kNoElement) {
        const auto& p = pairs_[pair_at_[x]];
        s.links.push_back({p.leaf, p.node, id1(x)});
      }
    }
    s.triples = triples_;
    emit(s);
  }

  void emit(const HyperShape& s) {
    if (check_hyper_shape(s, reading_).ok()) out_.push_back(canonical_code_unchecked(s));
  }

  const std::vector<Element>& order0_;
  const OrderTree& tree0_;
  const TripleSet& triples_;
  const std::vector<PairVertex>& pairs_;
  TieReading reading_;
  std::vector<CanonicalCode>& out_;

  std::size_t size0_ = 0;
  std::vector<std::uint32_t> position0_;
  const FullBinaryTree* tree1_ = nullptr;
  std::vector<Element> pair_at_;
  std::vector<std::vector<Element>> by_projection_;
  std::vector<std::uint32_t> levels_;
  std::uint32_t next0_ = 0;
  std::uint32_t level_ = 0;
};

}  // namespace

Catalog enumerate_hyper(const Hypergraph3& hypergraph, const EnumerationOptions& options) {
  const std::size_t n = hypergraph.vertex_count;
  if (n == 0) throw std::invalid_argument("enumerate_hyper: hypergraph needs at least one vertex");
  const auto trees = full_binary_trees(n);

  std::vector<std::vector<CanonicalCode>> per_tree(trees.size());
  std::atomic<std::size_t> retained{0}, finished{0};
  parallel_for(trees.size(), options.jobs, [&](std::size_t i) {
    const auto& shape_tree = trees[i];
    std::vector<Element> leaves;
    for (Element e = 0; e < shape_tree.size(); e += 2) leaves.push_back(e);
    auto& out = per_tree[i];
    for_each_linear_extension(shape_tree, [&](std::span<const Element> order) {
      const std::vector<Element> order0(order.begin(), order.end());
      const auto base = devlin_shape(shape_tree, order0);
      const auto tree0 = tree_from_orders(base.leq, base.pre);
      std::vector<Element> assignment(n);
      std::iota(assignment.begin(), assignment.end(), 0);
      do {
        std::vector<Element> image(n);
        for (std::size_t v = 0; v < n; ++v) image[v] = leaves[assignment[v]];
        const auto triples = hypergraph.triples.mapped(image);
        if (!hypergraph_compatible(*tree0, base.pre, leaves, triples)) continue;
        const auto pairs = neighbourhood_vertices(*tree0, base.pre);
        HyperExtensionSearch(order0, *tree0, triples, pairs, options.reading, out).run();
      } while (std::next_permutation(assignment.begin(), assignment.end()));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    const auto done = finished.fetch_add(1) + 1;
    if (options.mode == Mode::full && retained.fetch_add(out.size()) + out.size() > options.cap) {
      throw ResourceLimitExceeded("hyper: more than " + std::to_string(options.cap) + " shapes after " +
                                  std::to_string(done) + " of " + std::to_string(trees.size()) +
                                  " tree-0 shapes");
    }
  });

  Catalog catalog;
  catalog.family = Family::hyper;
  catalog.n = n;
  catalog.input = structure_text(hypergraph);
  catalog.retained = options.mode == Mode::full;
  catalog.settings["mode"] = catalog.retained ? "full" : "count_only";
  catalog.settings["tie_reading"] = to_string(options.reading);
  std::vector<CanonicalCode> all;
  for (auto& codes : per_tree) all.insert(all.end(), codes.begin(), codes.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  catalog.count = all.size();
  if (catalog.retained) catalog.codes = std::move(all);
  return catalog;
}

}  // namespace bigramsey
