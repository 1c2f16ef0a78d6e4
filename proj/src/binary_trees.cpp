#include "bigramsey/binary_trees.hpp"

#include <stdexcept>

namespace bigramsey {

namespace {

// Subtrees are built with node numbers relative to `offset`.
std::vector<FullBinaryTree> build(std::size_t leaves) {
  std::vector<FullBinaryTree> out;
  if (leaves == 1) {
    FullBinaryTree t;
    t.root = 0;
    t.parent = {kNoElement};
    t.left = {kNoElement};
    t.right = {kNoElement};
    out.push_back(std::move(t));
    return out;
  }
  for (std::size_t l = 1; l < leaves; ++l) {
    const auto lefts = build(l);
    const auto rights = build(leaves - l);
    const auto root = static_cast<Element>(2 * l - 1);
    for (const auto& a : lefts) {
      for (const auto& b : rights) {
        FullBinaryTree t;
        const std::size_t size = a.size() + 1 + b.size();
        t.root = root;
        t.parent.assign(size, kNoElement);
        t.left.assign(size, kNoElement);
        t.right.assign(size, kNoElement);
        for (Element i = 0; i < a.size(); ++i) {
          t.parent[i] = a.parent[i] == kNoElement ? root : a.parent[i];
          t.left[i] = a.left[i];
          t.right[i] = a.right[i];
        }
        const Element shift = root + 1;
        for (Element i = 0; i < b.size(); ++i) {
          t.parent[shift + i] = b.parent[i] == kNoElement ? root : shift + b.parent[i];
          t.left[shift + i] = b.left[i] == kNoElement ? kNoElement : shift + b.left[i];
          t.right[shift + i] = b.right[i] == kNoElement ? kNoElement : shift + b.right[i];
        }
        t.left[root] = a.root;
        t.right[root] = shift + b.root;
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

struct ExtensionWalker {
  const FullBinaryTree& tree;
  std::vector<Element> sequence;

  template <class Leaf>
  void walk(std::uint64_t available, Leaf&& leaf) {
    if (available == 0) {
      leaf();
      return;
    }
    for (std::uint64_t rest = available; rest != 0; rest &= rest - 1) {
      const auto e = static_cast<Element>(__builtin_ctzll(rest));
      std::uint64_t next = available & ~(std::uint64_t{1} << e);
      if (!tree.is_leaf(e)) {
        next |= std::uint64_t{1} << tree.left[e];
        next |= std::uint64_t{1} << tree.right[e];
      }
      sequence.push_back(e);
      walk(next, leaf);
      sequence.pop_back();
    }
  }
};

void check_size(const FullBinaryTree& tree) {
  if (tree.size() > 64) throw std::invalid_argument("linear extensions: tree larger than 64 nodes");
}

}  // namespace

std::vector<FullBinaryTree> full_binary_trees(std::size_t leaves) {
  if (leaves == 0) throw std::invalid_argument("full_binary_trees: need at least one leaf");
  return build(leaves);
}

void for_each_linear_extension(const FullBinaryTree& tree,
                               const std::function<void(std::span<const Element>)>& visit) {
  check_size(tree);
  ExtensionWalker w{tree, {}};
  w.sequence.reserve(tree.size());
  w.walk(std::uint64_t{1} << tree.root, [&] { visit(w.sequence); });
}

std::uint64_t count_linear_extensions(const FullBinaryTree& tree) {
  check_size(tree);
  ExtensionWalker w{tree, {}};
  w.sequence.reserve(tree.size());
  std::uint64_t count = 0;
  w.walk(std::uint64_t{1} << tree.root, [&] { ++count; });
  return count;
}

}  // namespace bigramsey
