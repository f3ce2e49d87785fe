// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "multinbr/error.hpp"
#include "multinbr/random.hpp"

namespace multinbr {

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  g_.rows_.assign(n, Bitset(n));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v,
                                     bool reject_duplicates) {
  const std::size_t n = g_.rows_.size();
  if (u >= n || v >= n)
    throw ParameterError("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") out of range for n=" +
                         std::to_string(n));
  if (u == v)
    throw ParameterError("self-loop at vertex " + std::to_string(u));
  if (g_.rows_[u].test(v)) {
    if (reject_duplicates)
      throw ParameterError("duplicate edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
    return *this;
  }
  g_.rows_[u].set(v);
  g_.rows_[v].set(u);
  ++g_.edges_;
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return std::move(b).build();
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) gb.add_edge(u, static_cast<Vertex>(a + v));
  return std::move(gb).build();
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterError("edge probability must lie in [0,1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) b.add_edge(u, v);
  return std::move(b).build();
}

VertexSet make_vertex_set(std::vector<Vertex> ids, std::size_t n) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.back() >= n)
    throw ParameterError("vertex id " + std::to_string(ids.back()) +
                         " out of range for n=" + std::to_string(n));
  return ids;
}

VertexSet to_vertex_set(const Bitset& bits) {
  VertexSet out;
  bits.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

Bitset to_bitset(const VertexSet& set, std::size_t n) {
  Bitset b(n);
  for (Vertex v : set) b.set(v);
  return b;
}

Bitset common_neighbors_bits(const Graph& g, const VertexSet& x) {
  if (x.empty())
    throw ParameterError("common neighbours of the empty set are undefined");
  Bitset acc = g.neighbors(x.front());
  for (std::size_t i = 1; i < x.size(); ++i) acc &= g.neighbors(x[i]);
  return acc;
}

Bitset common_neighbors_bits(const Graph& g, const Bitset& x) {
  const std::size_t first = x.first();
  if (first == x.size())
    throw ParameterError("common neighbours of the empty set are undefined");
  Bitset acc = g.neighbors(static_cast<Vertex>(first));
  x.for_each([&](std::size_t v) { acc &= g.neighbors(static_cast<Vertex>(v)); });
  return acc;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& x) {
  for (Vertex v : x)
    if (v >= g.vertex_count())
      throw ParameterError("vertex id out of range");
  return to_vertex_set(common_neighbors_bits(g, x));
}

VertexSet gamma_iterate(const Graph& g, const VertexSet& x, int k) {
  if (k < 1) throw ParameterError("iteration count must be >= 1");
  VertexSet cur = x;
  for (int i = 0; i < k; ++i) cur = common_neighbors(g, cur);
  return cur;
}

bool contains_complete_bipartite(const Graph& g, std::size_t a,
                                 std::size_t b) {
  if (a < 1 || b < 1) throw ParameterError("K_{a,b} needs a, b >= 1");
  const std::size_t small = std::min(a, b);
  const std::size_t large = std::max(a, b);
  const std::size_t n = g.vertex_count();
  if (small + large > n) return false;

  // Choose the smaller side S vertex by vertex; Gamma(S) only shrinks, so a
  // branch dies once fewer than `large` common neighbours remain.
  Bitset eligible(n);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= large) eligible.set(v);

  std::function<bool(std::size_t, std::size_t, const Bitset&)> search =
      [&](std::size_t start, std::size_t chosen, const Bitset& common) {
        if (chosen == small) return common.count() >= large;
        for (std::size_t v = start; v < n; ++v) {
          if (!eligible.test(v)) continue;
          Bitset next = chosen == 0 ? g.neighbors(static_cast<Vertex>(v))
                                    : common & g.neighbors(static_cast<Vertex>(v));
          if (next.count() < large) continue;
          if (search(v + 1, chosen + 1, next)) return true;
        }
        return false;
      };
  return search(0, 0, Bitset(n));
}

Graph x_km_graph(std::size_t k, std::size_t m) {
  if (k < 2 || m < 1) throw ParameterError("X_{k,m} needs k >= 2 and m >= 1");
  GraphBuilder b((m + 1) * k);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) b.add_edge(i, j);
  for (std::size_t l = 1; l <= m; ++l)
    for (std::size_t j = 1; j <= k; ++j) {
      const auto v = static_cast<Vertex>(k + (l - 1) * k + (j - 1));
      for (std::size_t i = 1; i <= k; ++i)
        if (i != j) b.add_edge(static_cast<Vertex>(i - 1), v);
    }
  return std::move(b).build();
}

GraphDensity density(const Graph& g) {
  if (g.vertex_count() == 0)
    throw ParameterError("density of the empty graph is undefined");
  return {g.edge_count(), g.vertex_count()};
}

bool is_balanced(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw ParameterError("balancedness of the empty graph is undefined");
  if (n > cap || n > 63)
    throw CapacityError("is_balanced brute force capped at " +
                        std::to_string(cap) + " vertices, got " +
                        std::to_string(n));
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  const GraphDensity whole = density(g);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s <= all; ++s) {
    std::uint64_t twice_edges = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      twice_edges += static_cast<std::uint64_t>(std::popcount(adj[v] & s));
    }
    const GraphDensity sub{twice_edges / 2,
                           static_cast<std::uint64_t>(std::popcount(s))};
    if (sub > whole) return false;
  }
  return true;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, Bitset p, Bitset x,
                   std::vector<VertexSet>& out) {
  if (p.none() && x.none()) {
    VertexSet clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Tomita pivot: the vertex of P u X with most neighbours in P.
  std::size_t pivot = 0, best = 0;
  bool have_pivot = false;
  auto consider = [&](std::size_t u) {
    const std::size_t c = p.count_and(g.neighbors(static_cast<Vertex>(u)));
    if (!have_pivot || c > best) {
      pivot = u;
      best = c;
      have_pivot = true;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  Bitset candidates = p;
  candidates.subtract(g.neighbors(static_cast<Vertex>(pivot)));
  candidates.for_each([&](std::size_t v) {
    const Bitset& nv = g.neighbors(static_cast<Vertex>(v));
    r.push_back(static_cast<Vertex>(v));
    bron_kerbosch(g, r, p & nv, x & nv, out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;
  VertexSet r;
  bron_kerbosch(g, r, Bitset::full(n), Bitset(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_clique(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  return !for_each_clique(g, k, [](const VertexSet&) { return false; });
}

bool clique_extends_to_xkm(const Graph& g, const VertexSet& clique,
                           std::size_t m) {
  const std::size_t k = clique.size();
  if (k < 2) throw ParameterError("X_{k,m} extension needs a clique of size >= 2");
  if (m < 1) throw ParameterError("X_{k,m} extension needs m >= 1");
  for (std::size_t i = 0; i < k; ++i) {
    if (clique[i] >= g.vertex_count())
      throw ParameterError("clique vertex out of range");
    for (std::size_t j = i + 1; j < k; ++j)
      if (!g.adjacent(clique[i], clique[j]))
        throw ParameterError("vertex set is not a clique");
  }
  const std::size_t n = g.vertex_count();
  const Bitset in_clique = to_bitset(clique, n);

  // slots: m copies of each clique position j; slot s wants a vertex adjacent
  // to every clique member except clique[s / m].
  std::vector<Bitset> slot_candidates;
  slot_candidates.reserve(k * m);
  for (std::size_t j = 0; j < k; ++j) {
    Bitset cand = Bitset::full(n);
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) cand &= g.neighbors(clique[i]);
    cand.subtract(in_clique);
    if (cand.count() < m) return false;
    for (std::size_t l = 0; l < m; ++l) slot_candidates.push_back(cand);
  }

  // Bipartite matching of slots to vertices (Kuhn's augmenting paths); the
  // extension exists iff every slot is matched.
  std::vector<std::ptrdiff_t> owner(n, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t slot) {
    bool found = false;
    slot_candidates[slot].for_each([&](std::size_t v) {
      if (found || seen[v]) return;
      seen[v] = 1;
      if (owner[v] < 0 || augment(static_cast<std::size_t>(owner[v]))) {
        owner[v] = static_cast<std::ptrdiff_t>(slot);
        found = true;
      }
    });
    return found;
  };
  for (std::size_t s = 0; s < slot_candidates.size(); ++s) {
    seen.assign(n, 0);
    if (!augment(s)) return false;
  }
  return true;
}

bool contains_xkm(const Graph& g, std::size_t k, std::size_t m) {
  if (k < 2 || m < 1) throw ParameterError("X_{k,m} needs k >= 2 and m >= 1");
  if ((m + 1) * k > g.vertex_count()) return false;
  return !for_each_clique(g, k, [&](const VertexSet& c) {
    return !clique_extends_to_xkm(g, c, m);
  });
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> Graph {
    throw FormatError("graph line " + std::to_string(line_no) + ": " + why);
  };
  if (!std::getline(in, line)) {
    line_no = 1;
    return fail("missing header");
  }
  line_no = 1;
  std::istringstream header(line);
  std::string tag;
  long long n = -1;
  std::string extra;
  if (!(header >> tag >> n) || tag != "n" || n < 0 || (header >> extra))
    return fail("expected 'n <vertex-count>'");
  GraphBuilder b(static_cast<std::size_t>(n));
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || (row >> extra)) return fail("expected '<u> <v>'");
    if (u < 0 || v < 0 || u >= n || v >= n) return fail("vertex id out of range");
    if (u >= v) return fail("edges must satisfy u < v");
    try {
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), true);
    } catch (const ParameterError& e) {
      return fail(e.what());
    }
  }
  return std::move(b).build();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file: " + path);
  write_graph(out, g);
}

}  // namespace multinbr
