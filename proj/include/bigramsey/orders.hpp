#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace bigramsey {

/// Elements of a finite ground set are dense 0-based indices.
using Element = std::uint32_t;
inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

/// A linear order on {0, ..., n-1}, stored as element -> rank.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws std::invalid_argument unless `rank` is a permutation of 0..n-1.
  explicit LinearOrder(std::vector<std::uint32_t> rank);

  static LinearOrder identity(std::size_t n);
  /// `sequence[i]` is the element of rank i.
  static LinearOrder from_sequence(std::span<const Element> sequence);

  std::size_t size() const { return rank_.size(); }
  std::uint32_t rank(Element e) const { return rank_[e]; }
  Element at(std::size_t position) const { return by_rank_[position]; }
  bool less(Element a, Element b) const { return rank_[a] < rank_[b]; }
  std::span<const std::uint32_t> ranks() const { return rank_; }
  std::span<const Element> sequence() const { return by_rank_; }

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<std::uint32_t> rank_;
  std::vector<Element> by_rank_;
};

/// A total preorder given by levels: a ⪯ b iff level(a) <= level(b).
/// On a finite set every such preorder is a well-preorder.
class WellPreorder {
 public:
  WellPreorder() = default;
  explicit WellPreorder(std::vector<std::uint32_t> level) : level_(std::move(level)) {}

  /// Linear well-order in which `sequence[i]` has level i.
  static WellPreorder from_sequence(std::span<const Element> sequence);

  std::size_t size() const { return level_.size(); }
  std::uint32_t level(Element e) const { return level_[e]; }
  std::span<const std::uint32_t> levels() const { return level_; }

  bool precedes_or_ties(Element a, Element b) const { return level_[a] <= level_[b]; }
  bool strictly_precedes(Element a, Element b) const { return level_[a] < level_[b]; }
  bool tied(Element a, Element b) const { return level_[a] == level_[b]; }

  /// True iff no two distinct elements share a level (the preorder is linear).
  bool is_linear() const;
  /// Same preorder with levels renumbered to 0..k-1 without gaps.
  WellPreorder densified() const;

  friend bool operator==(const WellPreorder&, const WellPreorder&) = default;

 private:
  std::vector<std::uint32_t> level_;
};

}  // namespace bigramsey
