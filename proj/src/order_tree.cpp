#include "bigramsey/order_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace bigramsey {

std::vector<Element> OrderTree::leaves() const {
  std::vector<Element> out;
  for (Element e = 0; e < size(); ++e) {
    if (is_leaf(e)) out.push_back(e);
  }
  return out;
}

std::optional<OrderTree> tree_from_orders(const LinearOrder& leq, const WellPreorder& pre) {
  const std::size_t n = leq.size();
  if (pre.size() != n) throw std::invalid_argument("tree_from_orders: ground sets differ");
  if (n == 0) return std::nullopt;

  // rel[a*n+b] = a ⊑ b. Scanning outward from each a along ≤ keeps the minimum
  // level of the strictly-between elements, so the predicate costs O(n^2).
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t pa = 0; pa < n; ++pa) {
    const Element a = leq.at(pa);
    const auto la = pre.level(a);
    rel[a * n + a] = 1;
    for (int dir : {-1, 1}) {
      auto min_between = std::numeric_limits<std::uint32_t>::max();
      for (std::ptrdiff_t pb = static_cast<std::ptrdiff_t>(pa) + dir;
           pb >= 0 && pb < static_cast<std::ptrdiff_t>(n); pb += dir) {
        const Element b = leq.at(static_cast<std::size_t>(pb));
        // c ⪯ a and c ⪯ b with la <= lb reduces to level(c) <= la.
        if (la <= pre.level(b) && min_between > la) rel[a * n + b] = 1;
        min_between = std::min(min_between, pre.level(b));
      }
    }
  }

  // Partial order: antisymmetry and transitivity.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !rel[a * n + b]) continue;
      if (rel[b * n + a]) return std::nullopt;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[b * n + c] && !rel[a * n + c]) return std::nullopt;
      }
    }
  }

  // Unique minimum.
  Element root = kNoElement;
  for (Element r = 0; r < n && root == kNoElement; ++r) {
    bool below_all = true;
    for (std::size_t b = 0; b < n && below_all; ++b) below_all = rel[r * n + b] != 0;
    if (below_all) root = r;
  }
  if (root == kNoElement) return std::nullopt;

  // Down-sets are chains; the parent is the ancestor with the deepest down-set.
  std::vector<std::uint32_t> down_size(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) down_size[b] += rel[a * n + b];
  }
  OrderTree t;
  t.root_ = root;
  t.parent_.assign(n, kNoElement);
  t.depth_.assign(n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<Element> below;
    for (std::size_t a = 0; a < n; ++a) {
      if (a != b && rel[a * n + b]) below.push_back(static_cast<Element>(a));
    }
    for (std::size_t i = 0; i < below.size(); ++i) {
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        const auto x = below[i], y = below[j];
        if (!rel[x * n + y] && !rel[y * n + x]) return std::nullopt;
      }
    }
    t.depth_[b] = static_cast<std::uint32_t>(below.size());
    for (Element a : below) {
      if (down_size[a] == below.size()) t.parent_[b] = a;
    }
  }

  t.child_begin_.assign(n + 1, 0);
  for (std::size_t b = 0; b < n; ++b) {
    if (t.parent_[b] != kNoElement) ++t.child_begin_[t.parent_[b] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) t.child_begin_[i + 1] += t.child_begin_[i];
  t.children_.resize(n - 1);
  std::vector<std::uint32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
  for (std::size_t b = 0; b < n; ++b) {
    if (t.parent_[b] != kNoElement) t.children_[fill[t.parent_[b]]++] = static_cast<Element>(b);
  }
  t.ancestor_ = std::move(rel);
  return t;
}

Element meet(const OrderTree& tree, Element a, Element b) {
  while (tree.depth(a) > tree.depth(b)) a = tree.parent(a);
  while (tree.depth(b) > tree.depth(a)) b = tree.parent(b);
  while (a != b) {
    a = tree.parent(a);
    b = tree.parent(b);
  }
  return a;
}

bool GeneratedSubtree::contains(Element e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

GeneratedSubtree generated_subtree(const OrderTree& tree, std::span<const Element> seeds) {
  if (seeds.empty()) throw std::invalid_argument("generated_subtree: empty seed set");
  std::vector<std::uint8_t> in(tree.size(), 0);
  for (Element s : seeds) {
    if (s >= tree.size()) throw std::invalid_argument("generated_subtree: element out of range");
    in[s] = 1;
  }
  // Meets of seed pairs already close the set: the meet of two meets is a
  // meet of two seeds.
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    for (std::size_t j = i + 1; j < seeds.size(); ++j) in[meet(tree, seeds[i], seeds[j])] = 1;
  }
  GeneratedSubtree out;
  for (Element e = 0; e < tree.size(); ++e) {
    if (in[e]) out.elements.push_back(e);
  }
  for (Element a : out.elements) {
    for (Element b : out.elements) {
      if (tree.is_strict_ancestor(a, b)) out.strict_ancestry.emplace_back(a, b);
    }
  }
  return out;
}

bool is_full_binary(const OrderTree& tree) {
  for (Element e = 0; e < tree.size(); ++e) {
    const auto k = tree.children(e).size();
    if (k != 0 && k != 2) return false;
  }
  return true;
}

bool is_compatible_pair(const LinearOrder& leq, const WellPreorder& pre) {
  const auto tree = tree_from_orders(leq, pre);
  return tree && is_full_binary(*tree);
}

}  // namespace bigramsey
