#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bigramsey/canonical.hpp"
#include "bigramsey/shapes.hpp"
#include "bigramsey/structures.hpp"

namespace bigramsey {

enum class StructureKind { graph, hypergraph3 };

/// A finite graph or 3-uniform hypergraph whose enumeration order ⪯ is the
/// vertex index order.
class EnumeratedStructure {
 public:
  explicit EnumeratedStructure(Graph graph);
  explicit EnumeratedStructure(Hypergraph3 hypergraph);

  StructureKind kind() const { return kind_; }
  std::size_t size() const { return size_; }

  /// Throws std::logic_error on the other kind.
  const Graph& graph() const;
  const Hypergraph3& hypergraph() const;

  bool adjacent(Element a, Element b) const { return (*adjacency_)(a, b); }
  bool hyperedge(Element a, Element b, Element c) const { return (*hyperedges_)(a, b, c); }

  /// Number of behaviour bits toward the first `level` vertices: level for a
  /// graph, C(level, 2) for a hypergraph.
  std::size_t prefix_bits(std::size_t level) const;

  /// Behaviour of v toward the first `level` vertices (level ≤ v), grouped by
  /// level: the group of level k describes v against vertex k (graph) or
  /// against the pairs {i, k}, i < k (hypergraph).
  std::vector<std::uint8_t> type_string(Element v, std::size_t level) const;

 private:
  StructureKind kind_;
  std::size_t size_;
  std::optional<Graph> graph_;
  std::optional<Hypergraph3> hypergraph_;
  std::shared_ptr<const AdjacencyMatrix> adjacency_;
  std::shared_ptr<const TripleMatrix> hyperedges_;
};

/// Vertices 0..n-1 with i < j adjacent iff bit i of j is set.
EnumeratedStructure rado_graph(std::size_t n);

/// Index of the pair {i, j}, i < j, in the diagonal enumeration
/// {0,1}, {0,2}, {1,2}, {0,3}, ...
std::size_t pair_index(std::size_t i, std::size_t j);

/// Vertices 0..n-1 with i < j < k a hyperedge iff bit pair_index(i, j) of k is
/// set.
EnumeratedStructure random_hyper3(std::size_t n);

/// Classes of vertices outside `subset` with identical behaviour toward it,
/// each class ascending, classes ordered by their least vertex. Throws
/// std::invalid_argument on an out-of-range vertex.
std::vector<std::vector<Element>> s_types(const EnumeratedStructure& structure, std::span<const Element> subset);

struct TypeNode {
  std::size_t level = 0;  ///< size of the defining initial segment
  std::size_t parent = 0;  ///< index into TypeTree::nodes; unused at level 0
  std::vector<Element> members;  ///< ascending
};

/// S-types for S = {0..m-1}, m = 0..depth, under reverse inclusion.
struct TypeTree {
  std::vector<TypeNode> nodes;  ///< by level, then by least member
  std::vector<std::vector<std::size_t>> levels;
  /// Inclusion-minimal node of each vertex.
  std::vector<std::size_t> node_of_vertex;

  std::size_t level_size(std::size_t level) const { return levels.at(level).size(); }
};

/// Throws std::invalid_argument when depth exceeds the structure size.
TypeTree tree_of_types(const EnumeratedStructure& structure, std::size_t depth);

enum class SubsetStatus {
  ok,
  not_antichain,  ///< one vertex's type lies below another's
  degenerate,     ///< two items share a type string
  not_binary,     ///< a meet splits into more than two branches
  rejected,       ///< the assembled two-tree structure fails validation
};

const char* to_string(SubsetStatus status);

struct SubsetShape {
  SubsetStatus status = SubsetStatus::ok;
  std::optional<CanonicalCode> code;
};

/// Shape of a vertex set in the graph's type tree: the meet closure of the
/// type strings, ≤ placing the 0-branch, the node, then the 1-branch, and ⪯
/// by level with meets ahead of a vertex on the same level. Edges are kept
/// unless `with_edges` is false (Devlin shapes). Throws
/// std::invalid_argument on an empty, repeated or out-of-range subset or a
/// hypergraph structure.
SubsetShape shape_of_subset_graph(const EnumeratedStructure& structure, std::span<const Element> subset,
                                  bool with_edges = true);

/// Two-tree shape of a vertex set in the hypergraph: tree 0 from the
/// hypergraph type tree, tree 1 from the neighbourhood-graph types of the
/// pair-vertices, checked with check_hyper_shape under `reading`.
SubsetShape shape_of_subset_hyper(const EnumeratedStructure& structure, std::span<const Element> subset,
                                  TieReading reading = TieReading::literal);

struct SurveyOptions {
  std::uint64_t budget = 1'000'000;  ///< exhaustive when C(N, n) fits
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  TieReading reading = TieReading::literal;
};

struct SurveyReport {
  Family family = Family::devlin;
  std::size_t n = 0;
  std::size_t structure_size = 0;
  bool truncated = false;  ///< sampled instead of exhaustive
  std::uint64_t examined = 0;
  std::uint64_t not_antichain = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t not_binary = 0;
  std::uint64_t rejected = 0;
  std::vector<CanonicalCode> codes;  ///< sorted, distinct
};

/// Shapes of the n-subsets of rado_graph(size) (devlin, sauer) or
/// random_hyper3(size) (hyper). Throws std::invalid_argument unless
/// 1 ≤ n ≤ size.
SurveyReport realized_shapes(Family family, std::size_t n, std::size_t size, const SurveyOptions& options = {});

}  // namespace bigramsey
