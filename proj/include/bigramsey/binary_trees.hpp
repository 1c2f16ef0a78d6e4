#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bigramsey/orders.hpp"

namespace bigramsey {

/// Full binary tree with nodes numbered by in-order position, so leaves sit at
/// even positions and the identity is the in-order linear order.
struct FullBinaryTree {
  Element root = 0;
  std::vector<Element> parent;  ///< kNoElement at the root
  std::vector<Element> left;    ///< kNoElement at leaves
  std::vector<Element> right;

  std::size_t size() const { return parent.size(); }
  std::size_t leaf_count() const { return (size() + 1) / 2; }
  bool is_leaf(Element e) const { return left[e] == kNoElement; }
};

/// All full binary trees with `leaves` leaves (Catalan many), generated by
/// recursive decomposition in increasing left-subtree size.
std::vector<FullBinaryTree> full_binary_trees(std::size_t leaves);

/// Calls visit(sequence) for every linear extension of the ancestor order
/// (parents before children), in lexicographic order of the sequences.
/// Supports trees of at most 64 nodes.
void for_each_linear_extension(const FullBinaryTree& tree,
                               const std::function<void(std::span<const Element>)>& visit);

/// Number of linear extensions, counted by walking the same search.
std::uint64_t count_linear_extensions(const FullBinaryTree& tree);

}  // namespace bigramsey
