#pragma once

#include <span>

#include "bigramsey/binary_trees.hpp"
#include "bigramsey/catalog.hpp"
#include "bigramsey/shapes.hpp"

namespace bigramsey {

/// The shape with ≤ the in-order of `tree` and ⪯ the given insertion order.
DevlinShape devlin_shape(const FullBinaryTree& tree, std::span<const Element> insertion_order);

/// All isomorphism classes of Devlin shapes on 2n-1 elements: full binary
/// trees with n leaves crossed with the linear extensions of their ancestor
/// order. Full mode asserts that no two emitted shapes share a code.
/// Throws std::invalid_argument for n == 0 and ResourceLimitExceeded when a
/// full catalog would exceed the cap.
Catalog enumerate_devlin(std::size_t n, const EnumerationOptions& options = {});

/// tan^(2n-1)(0) via the boustrophedon (Seidel-Entringer) triangle.
BigInt tangent_number(std::size_t n);

/// Sum over full binary trees with n leaves of m! / prod(subtree sizes), the
/// hook-length count of their linear extensions.
BigInt hook_count_oracle(std::size_t n);

}  // namespace bigramsey
