// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the plain data types.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "multinbr/complex.hpp"
#include "multinbr/filtration.hpp"
#include "multinbr/graph.hpp"

namespace oracle {

using multinbr::Graph;
using multinbr::PointCloud;
using multinbr::Simplex;
using multinbr::SimplicialComplex;
using multinbr::Vertex;

inline std::vector<Simplex> subsets_up_to(std::size_t n, std::size_t max_size) {
  std::vector<Simplex> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Simplex s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(static_cast<Vertex>(v));
    if (s.size() <= max_size) out.push_back(s);
  }
  return out;
}

inline std::size_t common_count(const Graph& g, const Simplex& s) {
  std::size_t c = 0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    bool all = true;
    for (Vertex v : s) all = all && g.adjacent(v, w);
    c += all;
  }
  return c;
}

inline std::set<Simplex> face_set(const SimplicialComplex& k) {
  auto all = k.all_simplices();
  return {all.begin(), all.end()};
}

// N_m(G) by testing every vertex subset directly (n <= 16).
inline std::set<Simplex> multineighbor_faces(const Graph& g, std::size_t m, int max_dim) {
  std::set<Simplex> out;
  for (auto& s : subsets_up_to(g.vertex_count(), static_cast<std::size_t>(max_dim) + 1))
    if (common_count(g, s) >= m) out.insert(s);
  return out;
}

// Rank over GF(2) by Gaussian elimination on dense bit rows.
inline std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows[0].size();
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r][w] & bit))
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers from the face set, degrees 0..max_degree.
inline std::vector<std::size_t> reduced_betti(const std::set<Simplex>& faces, int max_degree) {
  std::map<std::size_t, std::vector<Simplex>> by_size;
  for (const auto& s : faces) by_size[s.size()].push_back(s);
  auto rank_of = [&](std::size_t size) -> std::size_t {
    // rank of the boundary from simplices of `size` vertices to size - 1.
    if (size == 1) return by_size.count(1) && !by_size[1].empty() ? 1 : 0;
    if (!by_size.count(size) || by_size[size].empty()) return 0;
    const auto& lower = by_size[size - 1];
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& s : by_size[size]) {
      std::vector<std::uint64_t> row(words, 0);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) f.push_back(s[j]);
        const std::size_t i = index.at(f);
        row[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      rows.push_back(std::move(row));
    }
    return gf2_rank(std::move(rows));
  };
  std::vector<std::size_t> betti;
  for (int q = 0; q <= max_degree; ++q) {
    const std::size_t size = static_cast<std::size_t>(q) + 1;
    const std::size_t f = by_size.count(size) ? by_size[size].size() : 0;
    const std::size_t rq = rank_of(size), rq1 = rank_of(size + 1);
    betti.push_back(f - rq - rq1);
  }
  return betti;
}

inline std::vector<std::size_t> reduced_betti(const SimplicialComplex& k, int max_degree) {
  return reduced_betti(face_set(k), max_degree);
}

inline bool contains_kab(const Graph& g, std::size_t a, std::size_t b) {
  const std::size_t n = g.vertex_count();
  for (std::uint64_t am = 0; am < (std::uint64_t{1} << n); ++am) {
    if (static_cast<std::size_t>(__builtin_popcountll(am)) != a) continue;
    std::size_t common = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (am >> w & 1) continue;
      bool all = true;
      for (Vertex v = 0; v < n; ++v)
        if (am >> v & 1) all = all && g.adjacent(v, w);
      common += all;
    }
    if (common >= b) return true;
  }
  return false;
}

inline std::vector<Simplex> maximal_cliques(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Simplex> cliques;
  for (auto& s : subsets_up_to(n, n)) {
    bool clique = true;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) clique = clique && g.adjacent(s[i], s[j]);
    if (clique) cliques.push_back(s);
  }
  std::vector<Simplex> maximal;
  for (const auto& c : cliques) {
    bool is_max = true;
    for (const auto& d : cliques)
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) is_max = false;
    if (is_max) maximal.push_back(c);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

// m-th smallest of max_{v in s} d(v, w) over w outside s; negative if none.
inline double multinbr_grade(const PointCloud& x, const Simplex& s, std::size_t m) {
  std::vector<double> vals;
  for (Vertex w = 0; w < x.size(); ++w) {
    if (std::find(s.begin(), s.end(), w) != s.end()) continue;
    double mx = 0.0;
    for (Vertex v : s) mx = std::max(mx, multinbr::distance(x.points[v], x.points[w]));
    vals.push_back(mx);
  }
  if (vals.size() < m) return -1.0;
  std::sort(vals.begin(), vals.end());
  return vals[m - 1];
}

}  // namespace oracle
