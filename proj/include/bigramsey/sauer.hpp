#pragma once

#include <span>

#include "bigramsey/catalog.hpp"
#include "bigramsey/order_tree.hpp"
#include "bigramsey/structures.hpp"

namespace bigramsey {

/// For all distinct leaves a, b, c with c ⪯ meet(a, b): {a,c} ∈ E iff {b,c} ∈ E.
/// Throws std::invalid_argument unless `vertices` is exactly the leaf set.
bool graph_compatible(const OrderTree& tree, const WellPreorder& pre,
                      std::span<const Element> vertices, const EdgeSet& edges);

/// Isomorphism classes of Sauer shapes whose leaf graph is isomorphic to `graph`.
/// Throws std::invalid_argument for an empty graph and ResourceLimitExceeded
/// when a full catalog would exceed the cap.
Catalog enumerate_sauer(const Graph& graph, const EnumerationOptions& options = {});

}  // namespace bigramsey
