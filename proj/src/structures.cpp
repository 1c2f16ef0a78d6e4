#include "bigramsey/structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace bigramsey {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e[0] == e[1]) throw std::invalid_argument("EdgeSet: loop");
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Element a, Element b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

EdgeSet EdgeSet::mapped(std::span<const Element> image) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({image[e[0]], image[e[1]]});
  return EdgeSet(std::move(out));
}

TripleSet::TripleSet(std::vector<Triple> triples) : triples_(std::move(triples)) {
  for (auto& t : triples_) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("TripleSet: repeated vertex");
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

bool TripleSet::contains(Element a, Element b, Element c) const {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

TripleSet TripleSet::mapped(std::span<const Element> image) const {
  std::vector<Triple> out;
  out.reserve(triples_.size());
  for (const auto& t : triples_) out.push_back({image[t[0]], image[t[1]], image[t[2]]});
  return TripleSet(std::move(out));
}

Graph Graph::make(std::size_t n, EdgeSet edges) {
  for (const auto& e : edges.items()) {
    if (e[1] >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
  }
  return {n, std::move(edges)};
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return {n, EdgeSet(std::move(edges))};
}

Hypergraph3 Hypergraph3::make(std::size_t n, TripleSet triples) {
  for (const auto& t : triples.items()) {
    if (t[2] >= n) throw std::invalid_argument("Hypergraph3: vertex out of range");
  }
  return {n, std::move(triples)};
}

std::string structure_text(const Graph& graph) {
  std::string out = "graph " + std::to_string(graph.vertex_count) + "\n";
  for (const auto& e : graph.edges.items()) out += std::to_string(e[0]) + " " + std::to_string(e[1]) + "\n";
  return out;
}

std::string structure_text(const Hypergraph3& hypergraph) {
  std::string out = "hypergraph3 " + std::to_string(hypergraph.vertex_count) + "\n";
  for (const auto& t : hypergraph.triples.items()) {
    out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
  }
  return out;
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t universe, const EdgeSet& edges)
    : n_(universe), bits_(universe * universe, 0) {
  for (const auto& e : edges.items()) {
    bits_[e[0] * n_ + e[1]] = 1;
    bits_[e[1] * n_ + e[0]] = 1;
  }
}

TripleMatrix::TripleMatrix(std::size_t universe, const TripleSet& triples)
    : n_(universe), bits_(universe * universe * universe, 0) {
  for (const auto& t : triples.items()) {
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) bits_[(t[p[0]] * n_ + t[p[1]]) * n_ + t[p[2]]] = 1;
  }
}

}  // namespace bigramsey
