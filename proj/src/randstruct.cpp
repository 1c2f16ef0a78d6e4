#include "bigramsey/randstruct.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bigramsey/catalog.hpp"
#include "bigramsey/hyper.hpp"
#include "bigramsey/order_tree.hpp"
#include "bigramsey/parallel.hpp"

namespace bigramsey {

EnumeratedStructure::EnumeratedStructure(Graph graph)
    : kind_(StructureKind::graph),
      size_(graph.vertex_count),
      adjacency_(std::make_shared<AdjacencyMatrix>(graph.vertex_count, graph.edges)) {
  graph_ = std::move(graph);
}

EnumeratedStructure::EnumeratedStructure(Hypergraph3 hypergraph)
    : kind_(StructureKind::hypergraph3),
      size_(hypergraph.vertex_count),
      hyperedges_(std::make_shared<TripleMatrix>(hypergraph.vertex_count, hypergraph.triples)) {
  hypergraph_ = std::move(hypergraph);
}

const Graph& EnumeratedStructure::graph() const {
  if (!graph_) throw std::logic_error("EnumeratedStructure: not a graph");
  return *graph_;
}

const Hypergraph3& EnumeratedStructure::hypergraph() const {
  if (!hypergraph_) throw std::logic_error("EnumeratedStructure: not a hypergraph");
  return *hypergraph_;
}

std::size_t EnumeratedStructure::prefix_bits(std::size_t level) const {
  return kind_ == StructureKind::graph ? level : level * (level - (level > 0 ? 1 : 0)) / 2;
}

std::vector<std::uint8_t> EnumeratedStructure::type_string(Element v, std::size_t level) const {
  std::vector<std::uint8_t> bits;
  bits.reserve(prefix_bits(level));
  for (Element k = 0; k < level; ++k) {
    if (kind_ == StructureKind::graph) {
      bits.push_back(adjacent(k, v));
    } else {
      for (Element i = 0; i < k; ++i) bits.push_back(hyperedge(i, k, v));
    }
  }
  return bits;
}

EnumeratedStructure rado_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Element j = 1; j < n; ++j) {
    for (Element i = 0; i < j && i < 32; ++i) {
      if (j >> i & 1U) edges.push_back({i, j});
    }
  }
  return EnumeratedStructure(Graph::make(n, EdgeSet(std::move(edges))));
}

std::size_t pair_index(std::size_t i, std::size_t j) {
  if (i >= j) throw std::invalid_argument("pair_index: needs i < j");
  return j * (j - 1) / 2 + i;
}

EnumeratedStructure random_hyper3(std::size_t n) {
  std::vector<Triple> triples;
  for (Element k = 2; k < n; ++k) {
    for (Element j = 1; j < k; ++j) {
      for (Element i = 0; i < j; ++i) {
        const auto p = pair_index(i, j);
        if (p < 32 && (k >> p & 1U)) triples.push_back({i, j, k});
      }
    }
  }
  return EnumeratedStructure(Hypergraph3::make(n, TripleSet(std::move(triples))));
}

std::vector<std::vector<Element>> s_types(const EnumeratedStructure& structure, std::span<const Element> subset) {
  std::vector<Element> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  for (Element e : s) {
    if (e >= structure.size()) throw std::invalid_argument("s_types: vertex out of range");
  }
  std::map<std::vector<std::uint8_t>, std::vector<Element>> classes;
  for (Element v = 0; v < structure.size(); ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    std::vector<std::uint8_t> behaviour;
    if (structure.kind() == StructureKind::graph) {
      for (Element a : s) behaviour.push_back(structure.adjacent(a, v));
    } else {
      for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = x + 1; y < s.size(); ++y) behaviour.push_back(structure.hyperedge(s[x], s[y], v));
      }
    }
    classes[behaviour].push_back(v);
  }
  std::vector<std::vector<Element>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

TypeTree tree_of_types(const EnumeratedStructure& structure, std::size_t depth) {
  const auto n = structure.size();
  if (depth > n) throw std::invalid_argument("tree_of_types: depth exceeds structure size");
  TypeTree tree;
  tree.node_of_vertex.assign(n, 0);
  std::vector<std::size_t> previous(n, 0);  // node of each vertex one level up
  for (std::size_t m = 0; m <= depth; ++m) {
    std::map<std::vector<std::uint8_t>, std::vector<Element>> classes;
    for (Element v = static_cast<Element>(m); v < n; ++v) classes[structure.type_string(v, m)].push_back(v);
    std::vector<std::vector<Element>> ordered;
    for (auto& [key, members] : classes) ordered.push_back(std::move(members));
    std::sort(ordered.begin(), ordered.end());
    tree.levels.emplace_back();
    std::vector<std::size_t> current(n, 0);
    for (auto& members : ordered) {
      TypeNode node;
      node.level = m;
      node.parent = m == 0 ? 0 : previous[members.front()];
      const auto id = tree.nodes.size();
      for (Element v : members) current[v] = id;
      node.members = std::move(members);
      tree.levels.back().push_back(id);
      tree.nodes.push_back(std::move(node));
    }
    for (Element v = static_cast<Element>(m); v < n; ++v) {
      if (v == m || m == depth) tree.node_of_vertex[v] = current[v];
    }
    previous = std::move(current);
  }
  return tree;
}

const char* to_string(SubsetStatus status) {
  switch (status) {
    case SubsetStatus::ok: return "ok";
    case SubsetStatus::not_antichain: return "not_antichain";
    case SubsetStatus::degenerate: return "degenerate";
    case SubsetStatus::not_binary: return "not_binary";
    case SubsetStatus::rejected: return "rejected";
  }
  return "?";
}

namespace {

// A type string split into per-level groups.
struct TrieItem {
  std::vector<std::uint8_t> bits;
  std::size_t level = 0;
};

struct TrieEntry {
  std::size_t level = 0;
  int item = -1;  // -1 for a meet
};

// Group k occupies bits [offset(k), offset(k + 1)).
struct GroupLayout {
  bool triangular = false;
  std::size_t offset(std::size_t k) const { return triangular ? k * (k - (k > 0 ? 1 : 0)) / 2 : k; }
};

bool same_group(const TrieItem& a, const TrieItem& b, std::size_t k, GroupLayout layout) {
  return std::equal(a.bits.begin() + layout.offset(k), a.bits.begin() + layout.offset(k + 1),
                    b.bits.begin() + layout.offset(k));
}

// Meet closure of the items laid out in ≤ order.
SubsetStatus build_trie(const std::vector<TrieItem>& items, std::vector<int> members, GroupLayout layout,
                        std::vector<TrieEntry>& out) {
  if (members.size() == 1) {
    out.push_back({items[members.front()].level, members.front()});
    return SubsetStatus::ok;
  }
  std::size_t shortest = items[members.front()].level;
  std::size_t longest = shortest;
  for (int m : members) {
    shortest = std::min(shortest, items[m].level);
    longest = std::max(longest, items[m].level);
  }
  std::size_t split = 0;
  while (split < shortest && std::all_of(members.begin(), members.end(), [&](int m) {
           return same_group(items[m], items[members.front()], split, layout);
         })) {
    ++split;
  }
  if (split == shortest) return longest > shortest ? SubsetStatus::not_antichain : SubsetStatus::degenerate;

  auto group = [&](int m) {
    return std::vector<std::uint8_t>(items[m].bits.begin() + layout.offset(split),
                                     items[m].bits.begin() + layout.offset(split + 1));
  };
  std::map<std::vector<std::uint8_t>, std::vector<int>> branches;
  for (int m : members) branches[group(m)].push_back(m);
  if (branches.size() != 2) return SubsetStatus::not_binary;
  auto low = std::move(branches.begin()->second);
  auto high = std::move(std::next(branches.begin())->second);
  if (auto s = build_trie(items, std::move(low), layout, out); s != SubsetStatus::ok) return s;
  out.push_back({split, -1});
  return build_trie(items, std::move(high), layout, out);
}

void check_subset(const EnumeratedStructure& structure, std::span<const Element> subset) {
  if (subset.empty()) throw std::invalid_argument("subset shape: empty subset");
  std::vector<Element> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("subset shape: repeated vertex");
  }
  if (sorted.back() >= structure.size()) throw std::invalid_argument("subset shape: vertex out of range");
}

// Sort key of ⪯: level, then a rank that puts meets ahead of vertices on
// the same level, then position. Equal keys are tied.
using PreKey = std::tuple<std::size_t, int, std::size_t>;

std::vector<std::uint32_t> dense_levels(const std::vector<PreKey>& keys) {
  std::vector<PreKey> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> levels;
  levels.reserve(keys.size());
  for (const auto& k : keys) {
    levels.push_back(static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
  }
  return levels;
}

std::vector<TrieItem> vertex_items(const EnumeratedStructure& structure, std::span<const Element> subset) {
  std::vector<TrieItem> items;
  for (Element v : subset) items.push_back({structure.type_string(v, v), v});
  return items;
}

std::vector<int> all_members(std::size_t n) {
  std::vector<int> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = static_cast<int>(i);
  return members;
}

}  // namespace

SubsetShape shape_of_subset_graph(const EnumeratedStructure& structure, std::span<const Element> subset,
                                  bool with_edges) {
  if (structure.kind() != StructureKind::graph) throw std::invalid_argument("shape_of_subset_graph: not a graph");
  check_subset(structure, subset);
  const auto items = vertex_items(structure, subset);
  std::vector<TrieEntry> trie;
  if (auto s = build_trie(items, all_members(items.size()), GroupLayout{false}, trie); s != SubsetStatus::ok) {
    return {s, std::nullopt};
  }

  std::vector<PreKey> keys;
  std::vector<Element> position(subset.size());
  for (std::size_t p = 0; p < trie.size(); ++p) {
    const bool meet_node = trie[p].item < 0;
    keys.emplace_back(trie[p].level, meet_node ? 0 : 1, p);
    if (!meet_node) position[trie[p].item] = static_cast<Element>(p);
  }
  auto leq = LinearOrder::identity(trie.size());
  WellPreorder pre(dense_levels(keys));
  if (!with_edges) return {SubsetStatus::ok, canonical_code(DevlinShape{std::move(leq), std::move(pre)})};

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (structure.adjacent(subset[i], subset[j])) edges.push_back({position[i], position[j]});
    }
  }
  return {SubsetStatus::ok, canonical_code(SauerShape{std::move(leq), std::move(pre), EdgeSet(std::move(edges))})};
}

SubsetShape shape_of_subset_hyper(const EnumeratedStructure& structure, std::span<const Element> subset,
                                  TieReading reading) {
  if (structure.kind() != StructureKind::hypergraph3) {
    throw std::invalid_argument("shape_of_subset_hyper: not a hypergraph");
  }
  check_subset(structure, subset);

  // Tree 0 over the hypergraph types of the vertices.
  const auto items0 = vertex_items(structure, subset);
  std::vector<TrieEntry> trie0;
  if (auto s = build_trie(items0, all_members(items0.size()), GroupLayout{true}, trie0); s != SubsetStatus::ok) {
    return {s, std::nullopt};
  }
  const auto size0 = trie0.size();
  std::vector<Element> position0(subset.size());
  std::vector<PreKey> keys0;
  for (std::size_t p = 0; p < size0; ++p) {
    const bool meet_node = trie0[p].item < 0;
    keys0.emplace_back(trie0[p].level, meet_node ? 1 : 2, meet_node ? p : 0);
    if (!meet_node) position0[trie0[p].item] = static_cast<Element>(p);
  }
  const WellPreorder pre0(dense_levels(keys0));
  const auto tree0 = tree_from_orders(LinearOrder::identity(size0), pre0);
  if (!tree0 || !is_full_binary(*tree0)) throw InvariantViolation("subset shape: tree 0 is not full binary");

  // Tree 1 over the pair-vertices (a, b), typed in the neighbourhood graph of
  // a by any leaf below b.
  const auto pairs = neighbourhood_vertices(*tree0, pre0);
  std::vector<TrieItem> items1;
  for (const auto& pair : pairs) {
    const Element a = subset[trie0[pair.leaf].item];
    Element below = kNoElement;
    for (Element p = 0; p < size0 && below == kNoElement; ++p) {
      if (trie0[p].item >= 0 && tree0->is_ancestor(pair.node, p)) below = subset[trie0[p].item];
    }
    TrieItem item;
    item.level = a;
    for (Element i = 0; i < a; ++i) item.bits.push_back(structure.hyperedge(i, a, below));
    items1.push_back(std::move(item));
  }
  std::vector<TrieEntry> trie1;
  if (!items1.empty()) {
    if (auto s = build_trie(items1, all_members(items1.size()), GroupLayout{false}, trie1); s != SubsetStatus::ok) {
      return {s, std::nullopt};
    }
  }

  HyperShape shape;
  std::vector<PreKey> keys = keys0;
  for (Element p = 0; p < size0; ++p) shape.v0.push_back(p);
  for (std::size_t p = 0; p < trie1.size(); ++p) {
    const bool meet_node = trie1[p].item < 0;
    keys.emplace_back(trie1[p].level, meet_node ? 0 : 2, meet_node ? p : 0);
    const auto vertex = static_cast<Element>(size0 + p);
    shape.v1.push_back(vertex);
    if (!meet_node) {
      const auto& pair = pairs[trie1[p].item];
      shape.links.push_back({pair.leaf, pair.node, vertex});
    }
  }
  std::sort(shape.links.begin(), shape.links.end());
  shape.pre = WellPreorder(dense_levels(keys));

  std::vector<Triple> triples;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      for (std::size_t k = j + 1; k < subset.size(); ++k) {
        if (structure.hyperedge(subset[i], subset[j], subset[k])) {
          triples.push_back({position0[i], position0[j], position0[k]});
        }
      }
    }
  }
  shape.triples = TripleSet(std::move(triples));

  if (!check_hyper_shape(shape, reading).ok()) return {SubsetStatus::rejected, std::nullopt};
  return {SubsetStatus::ok, canonical_code(shape)};
}

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

struct SurveyTally {
  std::set<CanonicalCode> codes;
  std::uint64_t examined = 0;
  std::uint64_t counts[5] = {0, 0, 0, 0, 0};

  void merge(SurveyTally&& other) {
    codes.merge(other.codes);
    examined += other.examined;
    for (int i = 0; i < 5; ++i) counts[i] += other.counts[i];
  }
};

constexpr std::uint64_t kSampleChunk = 4096;

}  // namespace

SurveyReport realized_shapes(Family family, std::size_t n, std::size_t size, const SurveyOptions& options) {
  if (n == 0 || n > size) throw std::invalid_argument("realized_shapes: need 1 <= n <= size");
  const auto structure = family == Family::hyper ? random_hyper3(size) : rado_graph(size);

  auto shape_of = [&](std::span<const Element> subset) {
    switch (family) {
      case Family::devlin: return shape_of_subset_graph(structure, subset, false);
      case Family::sauer: return shape_of_subset_graph(structure, subset, true);
      case Family::hyper: return shape_of_subset_hyper(structure, subset, options.reading);
    }
    throw std::logic_error("realized_shapes: bad family");
  };
  auto record = [&](SurveyTally& tally, std::span<const Element> subset) {
    auto result = shape_of(subset);
    ++tally.examined;
    ++tally.counts[static_cast<int>(result.status)];
    if (result.code) tally.codes.insert(std::move(*result.code));
  };

  SurveyReport report;
  report.family = family;
  report.n = n;
  report.structure_size = size;
  SurveyTally total;
  std::mutex merge_mutex;

  const auto subsets = binomial_saturating(size, n);
  if (subsets <= options.budget) {
    // Lexicographic n-subsets, split by their least element.
    parallel_for(size - n + 1, options.jobs, [&](std::size_t first) {
      SurveyTally tally;
      std::vector<Element> subset(n);
      subset[0] = static_cast<Element>(first);
      for (std::size_t i = 1; i < n; ++i) subset[i] = static_cast<Element>(first + i);
      for (;;) {
        record(tally, subset);
        std::size_t i = n;
        while (i > 1 && subset[i - 1] == size - n + i - 1) --i;
        if (i == 1) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < n; ++j) subset[j] = subset[j - 1] + 1;
      }
      std::lock_guard lock(merge_mutex);
      total.merge(std::move(tally));
    });
  } else {
    report.truncated = true;
    const auto chunks = (options.budget + kSampleChunk - 1) / kSampleChunk;
    parallel_for(chunks, options.jobs, [&](std::size_t chunk) {
      SurveyTally tally;
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(chunk)};
      std::mt19937_64 rng(seq);
      const auto count = std::min<std::uint64_t>(kSampleChunk, options.budget - chunk * kSampleChunk);
      std::vector<Element> subset;
      for (std::uint64_t s = 0; s < count; ++s) {
        // Floyd's sampling of n distinct vertices.
        subset.clear();
        for (std::size_t j = size - n; j < size; ++j) {
          const auto t = static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, j)(rng));
          if (std::find(subset.begin(), subset.end(), t) == subset.end()) {
            subset.push_back(t);
          } else {
            subset.push_back(static_cast<Element>(j));
          }
        }
        std::sort(subset.begin(), subset.end());
        record(tally, subset);
      }
      std::lock_guard lock(merge_mutex);
      total.merge(std::move(tally));
    });
  }

  report.examined = total.examined;
  report.not_antichain = total.counts[static_cast<int>(SubsetStatus::not_antichain)];
  report.degenerate = total.counts[static_cast<int>(SubsetStatus::degenerate)];
  report.not_binary = total.counts[static_cast<int>(SubsetStatus::not_binary)];
  report.rejected = total.counts[static_cast<int>(SubsetStatus::rejected)];
  report.codes.assign(total.codes.begin(), total.codes.end());
  return report;
}

}  // namespace bigramsey
