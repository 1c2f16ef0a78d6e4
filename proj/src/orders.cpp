#include "bigramsey/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace bigramsey {

LinearOrder::LinearOrder(std::vector<std::uint32_t> rank) : rank_(std::move(rank)) {
  by_rank_.assign(rank_.size(), kNoElement);
  for (Element e = 0; e < rank_.size(); ++e) {
    const auto r = rank_[e];
    if (r >= rank_.size() || by_rank_[r] != kNoElement) {
      throw std::invalid_argument("LinearOrder: ranks are not a permutation");
    }
    by_rank_[r] = e;
  }
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t i = 0; i < n; ++i) rank[i] = i;
  return LinearOrder(std::move(rank));
}

LinearOrder LinearOrder::from_sequence(std::span<const Element> sequence) {
  std::vector<std::uint32_t> rank(sequence.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] >= sequence.size()) {
      throw std::invalid_argument("LinearOrder: sequence element out of range");
    }
    rank[sequence[i]] = i;
  }
  return LinearOrder(std::move(rank));
}

WellPreorder WellPreorder::from_sequence(std::span<const Element> sequence) {
  std::vector<std::uint32_t> level(sequence.size(), 0);
  for (std::uint32_t i = 0; i < sequence.size(); ++i) level.at(sequence[i]) = i;
  return WellPreorder(std::move(level));
}

bool WellPreorder::is_linear() const {
  std::vector<std::uint32_t> sorted = level_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

WellPreorder WellPreorder::densified() const {
  std::vector<std::uint32_t> distinct = level_;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> dense(level_.size());
  for (std::size_t i = 0; i < level_.size(); ++i) {
    dense[i] = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), level_[i]) - distinct.begin());
  }
  return WellPreorder(std::move(dense));
}

}  // namespace bigramsey
