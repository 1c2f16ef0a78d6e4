#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bigramsey/orders.hpp"

namespace bigramsey {

using Edge = std::array<Element, 2>;
using Triple = std::array<Element, 3>;

/// Sorted set of unordered pairs, each stored with ascending entries.
class EdgeSet {
 public:
  EdgeSet() = default;
  /// Normalizes and deduplicates; throws std::invalid_argument on a loop.
  explicit EdgeSet(std::vector<Edge> edges);
  EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

  bool contains(Element a, Element b) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const Edge> items() const { return edges_; }
  /// Renames every endpoint x to image[x].
  EdgeSet mapped(std::span<const Element> image) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Sorted set of unordered triples of distinct elements.
class TripleSet {
 public:
  TripleSet() = default;
  /// Normalizes and deduplicates; throws std::invalid_argument on a repeated entry.
  explicit TripleSet(std::vector<Triple> triples);
  TripleSet(std::initializer_list<Triple> triples) : TripleSet(std::vector<Triple>(triples)) {}

  bool contains(Element a, Element b, Element c) const;
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  std::span<const Triple> items() const { return triples_; }
  TripleSet mapped(std::span<const Element> image) const;

  friend bool operator==(const TripleSet&, const TripleSet&) = default;

 private:
  std::vector<Triple> triples_;
};

/// Finite simple graph on 0..vertex_count-1.
struct Graph {
  std::size_t vertex_count = 0;
  EdgeSet edges;

  /// Throws std::invalid_argument if an edge leaves the vertex range.
  static Graph make(std::size_t n, EdgeSet edges);
  static Graph empty(std::size_t n) { return {n, {}}; }
  static Graph complete(std::size_t n);
};

/// Finite 3-uniform hypergraph on 0..vertex_count-1.
struct Hypergraph3 {
  std::size_t vertex_count = 0;
  TripleSet triples;

  static Hypergraph3 make(std::size_t n, TripleSet triples);
  static Hypergraph3 empty(std::size_t n) { return {n, {}}; }
};

/// Structure-file text: a header line ("graph n" / "hypergraph3 n") followed
/// by one sorted edge or triple per line.
std::string structure_text(const Graph& graph);
std::string structure_text(const Hypergraph3& hypergraph);

/// Dense symmetric 0/1 matrix over a universe, for hot compatibility loops.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix(std::size_t universe, const EdgeSet& edges);
  bool operator()(Element a, Element b) const { return bits_[a * n_ + b] != 0; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

/// Dense symmetric 0/1 cube over a universe.
class TripleMatrix {
 public:
  TripleMatrix(std::size_t universe, const TripleSet& triples);
  bool operator()(Element a, Element b, Element c) const { return bits_[(a * n_ + b) * n_ + c] != 0; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace bigramsey
