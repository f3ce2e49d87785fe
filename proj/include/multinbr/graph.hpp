// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "multinbr/bitset.hpp"

namespace multinbr {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1. Immutable once built; use
/// GraphBuilder (or one of the factories below) to create one.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Adds {u, v}. Throws ParameterError on self-loops or out-of-range ids;
  /// re-adding an existing edge is a no-op unless `reject_duplicates`.
  GraphBuilder& add_edge(Vertex u, Vertex v, bool reject_duplicates = false);

  Graph build() &&;

 private:
  Graph g_;
};

// Fixture factories.
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// G(n, p). Edge decisions are drawn in the order (0,1),(0,2),...,(n-2,n-1),
/// one uniform01() draw each, keeping the edge iff the draw is < p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Normalises ids into a VertexSet (sort + unique). Throws on ids >= n.
VertexSet make_vertex_set(std::vector<Vertex> ids, std::size_t n);

VertexSet to_vertex_set(const Bitset& bits);
Bitset to_bitset(const VertexSet& set, std::size_t n);

/// Vertices adjacent to every member of X. X must be nonempty.
VertexSet common_neighbors(const Graph& g, const VertexSet& x);
Bitset common_neighbors_bits(const Graph& g, const VertexSet& x);
Bitset common_neighbors_bits(const Graph& g, const Bitset& x);

/// Applies common_neighbors k >= 1 times. An intermediate empty result is a
/// ParameterError, since the operator is undefined on the empty set.
VertexSet gamma_iterate(const Graph& g, const VertexSet& x, int k);

/// True iff G contains K_{a,b} as a (not necessarily induced) subgraph.
bool contains_complete_bipartite(const Graph& g, std::size_t a, std::size_t b);

/// X_{k,m}: clique u_1..u_k on ids 0..k-1, and v_{j,l} on id k+(l-1)k+(j-1),
/// adjacent to every u_i with i != j.
Graph x_km_graph(std::size_t k, std::size_t m);

/// Exact rational edge/vertex density.
struct GraphDensity {
  std::uint64_t edges = 0;
  std::uint64_t vertices = 1;

  double value() const {
    return static_cast<double>(edges) / static_cast<double>(vertices);
  }
  friend bool operator==(const GraphDensity& a, const GraphDensity& b) {
    return a.edges * b.vertices == b.edges * a.vertices;
  }
  friend std::strong_ordering operator<=>(const GraphDensity& a,
                                          const GraphDensity& b) {
    return a.edges * b.vertices <=> b.edges * a.vertices;
  }
};

GraphDensity density(const Graph& g);

inline constexpr std::size_t kBalancedBruteForceCap = 16;

/// density(G) >= density(G[S]) for all nonempty S. Brute force; throws
/// CapacityError above `cap` vertices.
bool is_balanced(const Graph& g, std::size_t cap = kBalancedBruteForceCap);

/// All inclusion-maximal cliques, each sorted, in lexicographic order.
/// Isolated vertices are reported as singleton cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g);

bool contains_clique(const Graph& g, std::size_t k);

/// Calls f(clique) for every k-clique (sorted vertex list) until f returns
/// false. Returns false iff enumeration was stopped early.
template <class F>
bool for_each_clique(const Graph& g, std::size_t k, F&& f);

/// Whether clique C (|C| = k >= 2) extends to an X_{k,m} subgraph: mk
/// distinct outside vertices v_{j,l}, each adjacent to all of C but u_j.
bool clique_extends_to_xkm(const Graph& g, const VertexSet& clique,
                           std::size_t m);

/// True iff some k-clique of G extends to X_{k,m}.
bool contains_xkm(const Graph& g, std::size_t k, std::size_t m);

// Text format: "n <count>" then one "u v" line per edge with u < v.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// --- template implementation ------------------------------------------------

namespace detail {
template <class F>
bool clique_search(const Graph& g, std::size_t k, VertexSet& current,
                   const Bitset& candidates, F& f) {
  if (current.size() == k) return f(static_cast<const VertexSet&>(current));
  if (candidates.count() < k - current.size()) return true;
  bool keep_going = true;
  Bitset remaining = candidates;
  candidates.for_each([&](std::size_t v) {
    if (!keep_going) return;
    remaining.reset(v);
    current.push_back(static_cast<Vertex>(v));
    Bitset next = remaining & g.neighbors(static_cast<Vertex>(v));
    keep_going = clique_search(g, k, current, next, f);
    current.pop_back();
  });
  return keep_going;
}
}  // namespace detail

template <class F>
bool for_each_clique(const Graph& g, std::size_t k, F&& f) {
  if (k == 0 || k > g.vertex_count()) return true;
  VertexSet current;
  current.reserve(k);
  Bitset candidates(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) + 1 >= k) candidates.set(v);
  return detail::clique_search(g, k, current, candidates, f);
}

}  // namespace multinbr
