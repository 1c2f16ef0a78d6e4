#pragma once

#include <span>
#include <string>
#include <vector>

#include "bigramsey/catalog.hpp"
#include "bigramsey/errors.hpp"
#include "bigramsey/order_tree.hpp"
#include "bigramsey/shapes.hpp"
#include "bigramsey/structures.hpp"

namespace bigramsey {

/// For all distinct leaves a, b, c, d with d ⪯ c ⪯ meet(a, b):
/// {a,c,d} ∈ 𝓔 iff {b,c,d} ∈ 𝓔. Throws std::invalid_argument unless
/// `vertices` is exactly the leaf set.
bool hypergraph_compatible(const OrderTree& tree, const WellPreorder& pre,
                           std::span<const Element> vertices, const TripleSet& triples);

/// Pair-vertex (a, b): a leaf a and a node b of tree 0.
struct PairVertex {
  Element leaf;
  Element node;

  friend auto operator<=>(const PairVertex&, const PairVertex&) = default;
};

/// All (a, b) with a a leaf, a ≺ b, and no c ⊏ b with a ≺ c ≺ b. Sorted.
std::vector<PairVertex> neighbourhood_vertices(const OrderTree& tree, const WellPreorder& pre);

/// G¹ on the pair-vertices; edges index into `vertices`.
struct NeighbourhoodGraph {
  std::vector<PairVertex> vertices;
  EdgeSet edges;
};

/// Raised when the leaves below some node disagree on a hyperedge, i.e. the
/// hypergraph was not compatible with the tree.
class AgreementViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

/// {(a,b), (c,d)} with a ⪯ c is an edge iff some leaf e ⊒ d has {a,c,e} ∈ 𝓔.
/// Throws AgreementViolation when the leaves below d disagree.
NeighbourhoodGraph neighbourhood_graph(const OrderTree& tree, const WellPreorder& pre,
                                       const TripleSet& triples);

struct HyperShapeCheckViolation {
  int condition;  ///< 1..4
  std::string detail;
};

struct HyperShapeCheckReport {
  std::vector<HyperShapeCheckViolation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(int condition) const;
};

/// Evaluates the four compatibility conditions of a two-tree structure against
/// its hypergraph. Violations are reported, never thrown.
HyperShapeCheckReport check_hyper_shape(const HyperShape& shape, TieReading reading);

/// Isomorphism classes of two-tree shapes whose leaf hypergraph is isomorphic
/// to `hypergraph`, under `options.reading`.
Catalog enumerate_hyper(const Hypergraph3& hypergraph, const EnumerationOptions& options = {});

}  // namespace bigramsey
