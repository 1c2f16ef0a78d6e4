#pragma once

#include <cstddef>

#include "bigramsey/catalog.hpp"
#include "bigramsey/structures.hpp"

namespace bigramsey {

// Exhaustive reference searches. They share only the predicates
// (tree_from_orders, the compatibility checks, check_hyper_shape) and the canonical
// codes with the enumerators, never their generation strategy. All return
// retained catalogs.

/// Every (≤, ⪯) pair of linear orders on [2n-1], filtered by compatibility.
/// Throws std::invalid_argument for n outside 1..4.
Catalog brute_force_devlin(std::size_t n);

/// Every pair of linear orders on [2n-1] and every labelled copy of the graph
/// on the leaves. Throws std::invalid_argument for graphs outside 1..4 vertices.
Catalog brute_force_sauer(const Graph& graph);

/// ≤0 fixed to the index order (any shape has such a copy), every ⪯ on V0,
/// every labelled copy of the hypergraph, every placement of the
/// pair-vertices in ≤1, and every weak order on V0 ∪ V1 that keeps ⪯ on V0,
/// each checked with check_hyper_shape. Throws std::invalid_argument beyond 3 vertices.
Catalog brute_force_hyper(const Hypergraph3& hypergraph, TieReading reading);

/// Union of the enumerated catalogs over every labelled structure on n
/// vertices: the Devlin catalog itself, all graphs (n ≤ 4) or all 3-uniform
/// hypergraphs (n ≤ 3). Sorted and distinct; mode is forced to full.
std::vector<CanonicalCode> catalog_union(Family family, std::size_t n, const EnumerationOptions& options = {});

}  // namespace bigramsey
