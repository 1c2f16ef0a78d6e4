#pragma once

#include <string>
#include <vector>

#include "bigramsey/orders.hpp"
#include "bigramsey/structures.hpp"

namespace bigramsey {

/// ([2n-1], ≤, ⪯) with (≤, ⪯) a compatible pair and ⪯ linear.
struct DevlinShape {
  LinearOrder leq;
  WellPreorder pre;

  std::size_t size() const { return leq.size(); }
};

/// A Devlin shape plus a graph on the leaves of its tree.
struct SauerShape {
  LinearOrder leq;
  WellPreorder pre;
  EdgeSet edges;

  std::size_t size() const { return leq.size(); }
};

/// Membership triple {a, b, (a,b)}: `vertex` in V1 stands for the pair
/// (leaf, node) of tree 0.
struct PairLink {
  Element leaf;
  Element node;
  Element vertex;

  friend auto operator<=>(const PairLink&, const PairLink&) = default;
};

/// Two-sorted structure (V0 ∪ V1, ⪯, ≤0, ≤1, 𝓔, 𝒫) over a universe 0..U-1.
///
/// ≤0 and ≤1 are given by the listing order of `v0` and `v1`. `triples` live
/// on the leaves of tree 0 and `links` is the relation 𝒫.
struct HyperShape {
  WellPreorder pre;
  std::vector<Element> v0;
  std::vector<Element> v1;
  TripleSet triples;
  std::vector<PairLink> links;

  std::size_t universe() const { return pre.size(); }
};

/// How "π(a) ⪯ π(b) ⇒ a ⪯ b" is applied to elements with defined projections.
enum class TieReading {
  literal,  ///< also for π(a) = π(b): equal projections force a tie
  strict,   ///< only when π(a) ≺ π(b)
};

std::string to_string(TieReading reading);
/// Throws std::invalid_argument on anything but "literal" or "strict".
TieReading parse_tie_reading(const std::string& text);

}  // namespace bigramsey
