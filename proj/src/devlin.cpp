#include "bigramsey/devlin.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "bigramsey/errors.hpp"
#include "bigramsey/parallel.hpp"

namespace bigramsey {

DevlinShape devlin_shape(const FullBinaryTree& tree, std::span<const Element> insertion_order) {
  return {LinearOrder::identity(tree.size()), WellPreorder::from_sequence(insertion_order)};
}

Catalog enumerate_devlin(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw std::invalid_argument("enumerate_devlin: n must be positive");
  const auto trees = full_binary_trees(n);

  Catalog catalog;
  catalog.family = Family::devlin;
  catalog.n = n;
  catalog.retained = options.mode == Mode::full;
  catalog.settings["mode"] = catalog.retained ? "full" : "count_only";

  if (options.mode == Mode::count_only) {
    std::vector<std::uint64_t> per_tree(trees.size(), 0);
    parallel_for(trees.size(), options.jobs, [&](std::size_t i) { per_tree[i] = count_linear_extensions(trees[i]); });
    for (auto c : per_tree) catalog.count += c;
    return catalog;
  }

  std::vector<std::vector<CanonicalCode>> per_tree(trees.size());
  std::atomic<std::size_t> produced{0};
  parallel_for(trees.size(), options.jobs, [&](std::size_t i) {
    for_each_linear_extension(trees[i], [&](std::span<const Element> order) {
      if (produced.fetch_add(1) + 1 > options.cap) {
        throw ResourceLimitExceeded("devlin n=" + std::to_string(n) + ": more than " +
                                    std::to_string(options.cap) + " shapes; raise the cap or use count-only mode");
      }
      per_tree[i].push_back(canonical_code(devlin_shape(trees[i], order)));
    });
  });
  for (auto& codes : per_tree) {
    catalog.codes.insert(catalog.codes.end(), std::make_move_iterator(codes.begin()),
                         std::make_move_iterator(codes.end()));
  }
  std::sort(catalog.codes.begin(), catalog.codes.end());
  if (std::adjacent_find(catalog.codes.begin(), catalog.codes.end()) != catalog.codes.end()) {
    throw InvariantViolation("devlin: two enumerated shapes are isomorphic");
  }
  catalog.count = catalog.codes.size();
  return catalog;
}

BigInt tangent_number(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tangent_number: n must be positive");
  // Row k of the triangle ends in the zigzag number A_k; tan^(2n-1)(0) = A_{2n-1}.
  const std::size_t k = 2 * n - 1;
  std::vector<BigInt> row{1};
  for (std::size_t r = 1; r <= k; ++r) {
    std::vector<BigInt> next(r + 1);
    next[0] = 0;
    for (std::size_t j = 1; j <= r; ++j) next[j] = next[j - 1] + row[r - j];
    row = std::move(next);
  }
  return row.back();
}

namespace {

// Hook products of every full binary tree with the given leaf count, paired
// with node counts. Kept separate from the enumerator's tree builder.
std::vector<BigInt> hook_products(std::size_t leaves) {
  if (leaves == 1) return {BigInt(1)};
  std::vector<BigInt> out;
  const BigInt size = 2 * leaves - 1;
  for (std::size_t l = 1; l < leaves; ++l) {
    const auto left = hook_products(l);
    const auto right = hook_products(leaves - l);
    for (const auto& a : left) {
      for (const auto& b : right) out.push_back(a * b * size);
    }
  }
  return out;
}

}  // namespace

BigInt hook_count_oracle(std::size_t n) {
  if (n == 0) throw std::invalid_argument("hook_count_oracle: n must be positive");
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= 2 * n - 1; ++i) factorial *= i;
  BigInt total = 0;
  for (const auto& product : hook_products(n)) total += factorial / product;
  return total;
}

}  // namespace bigramsey
