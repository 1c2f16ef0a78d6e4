#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bigramsey/orders.hpp"

namespace bigramsey {

/// A finite rooted set-theoretic tree (V, ⊑) on dense element indices.
///
/// Built only by tree_from_orders(), which validates the tree axioms, so every
/// instance has a unique root, chain-shaped down-sets and well-defined meets.
class OrderTree {
 public:
  std::size_t size() const { return parent_.size(); }
  Element root() const { return root_; }
  /// kNoElement for the root.
  Element parent(Element e) const { return parent_[e]; }
  /// Children in ascending element order.
  std::span<const Element> children(Element e) const {
    return {children_.data() + child_begin_[e], children_.data() + child_begin_[e + 1]};
  }
  std::size_t depth(Element e) const { return depth_[e]; }
  bool is_leaf(Element e) const { return child_begin_[e] == child_begin_[e + 1]; }
  /// a ⊑ b (reflexive).
  bool is_ancestor(Element a, Element b) const { return ancestor_[a * size() + b] != 0; }
  bool is_strict_ancestor(Element a, Element b) const { return a != b && is_ancestor(a, b); }
  /// Leaves in ascending element order.
  std::vector<Element> leaves() const;

 private:
  friend std::optional<OrderTree> tree_from_orders(const LinearOrder&, const WellPreorder&);
  OrderTree() = default;

  Element root_ = kNoElement;
  std::vector<Element> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<Element> children_;
  std::vector<std::uint8_t> ancestor_;
};

/// The tree T(V, ≤, ⪯): a ⊑ b iff a ⪯ b and no c strictly ≤-between a and b
/// has c ⪯ a and c ⪯ b. Returns nullopt when that relation is not a tree.
std::optional<OrderTree> tree_from_orders(const LinearOrder& leq, const WellPreorder& pre);

/// Nearest common ancestor.
Element meet(const OrderTree& tree, Element a, Element b);

/// Meet closure of a vertex set together with ⊑ restricted to it.
struct GeneratedSubtree {
  std::vector<Element> elements;  ///< ascending
  /// Strict ancestry pairs (a, b) with a ⊏ b, both in `elements`, sorted.
  std::vector<std::pair<Element, Element>> strict_ancestry;

  bool contains(Element e) const;
};

/// Throws std::invalid_argument for an empty or out-of-range seed set.
GeneratedSubtree generated_subtree(const OrderTree& tree, std::span<const Element> seeds);

/// Every vertex has 0 or exactly 2 children.
bool is_full_binary(const OrderTree& tree);

/// (≤, ⪯) is a compatible pair: T(V, ≤, ⪯) is defined and full binary.
bool is_compatible_pair(const LinearOrder& leq, const WellPreorder& pre);

}  // namespace bigramsey
