// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/complex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "multinbr/error.hpp"

namespace multinbr {

namespace {

void check_simplex(const Simplex& s, std::size_t universe) {
  if (s.empty()) throw ParameterError("simplices must be nonempty");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i])
      throw ParameterError("simplex vertices must be strictly increasing");
  if (s.back() >= universe) throw ParameterError("simplex vertex out of range");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_sorted_dims(
    std::size_t universe, std::vector<std::vector<Simplex>> by_dim) {
  while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  SimplicialComplex k(universe);
  k.by_dim_ = std::move(by_dim);
  return k;
}

SimplicialComplex SimplicialComplex::closure_of(std::size_t universe,
                                                std::vector<Simplex> faces) {
  std::vector<std::set<Simplex>> layers;
  for (auto& f : faces) {
    check_simplex(f, universe);
    const auto d = static_cast<std::size_t>(simplex_dim(f));
    if (layers.size() <= d) layers.resize(d + 1);
    layers[d].insert(std::move(f));
  }
  for (std::size_t d = layers.size(); d-- > 1;)
    for (const auto& s : layers[d])
      for (auto& f : facets(s)) layers[d - 1].insert(std::move(f));
  std::vector<std::vector<Simplex>> by_dim(layers.size());
  for (std::size_t d = 0; d < layers.size(); ++d)
    by_dim[d].assign(layers[d].begin(), layers[d].end());
  return from_sorted_dims(universe, std::move(by_dim));
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t universe,
                                                std::vector<Simplex> faces) {
  std::vector<std::vector<Simplex>> by_dim;
  for (auto& f : faces) {
    check_simplex(f, universe);
    const auto d = static_cast<std::size_t>(simplex_dim(f));
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(std::move(f));
  }
  for (auto& layer : by_dim) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  for (std::size_t d = 1; d < by_dim.size(); ++d)
    for (const auto& s : by_dim[d])
      for (const auto& f : facets(s))
        if (!std::binary_search(by_dim[d - 1].begin(), by_dim[d - 1].end(), f))
          throw StructuralError("face list is not downward closed");
  return from_sorted_dims(universe, std::move(by_dim));
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> kNone;
  if (d < 0 || d > dimension()) return kNone;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::size() const {
  std::size_t total = 0;
  for (const auto& layer : by_dim_) total += layer.size();
  return total;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> f;
  for (const auto& layer : by_dim_) f.push_back(layer.size());
  return f;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto& layer = simplices(simplex_dim(s));
  return std::binary_search(layer.begin(), layer.end(), s);
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    const auto& layer = simplices(d);
    std::vector<char> covered(layer.size(), 0);
    for (const auto& s : simplices(d + 1))
      for (const auto& f : facets(s)) {
        auto it = std::lower_bound(layer.begin(), layer.end(), f);
        covered[static_cast<std::size_t>(it - layer.begin())] = 1;
      }
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (!covered[i]) out.push_back(layer[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

SimplicialComplex full_simplex(std::size_t n, int max_dim) {
  return multineighbor_complex(complete_graph(n), 0, max_dim);
}

SimplicialComplex multineighbor_complex(const Graph& g, std::size_t m,
                                        int max_dim) {
  if (max_dim < 0) throw ParameterError("max_dim must be >= 0");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Simplex>> by_dim;

  // Layer d holds the accepted d-faces together with their Gamma.
  std::vector<Simplex> layer;
  std::vector<Bitset> gammas;
  VertexSet vertices;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= m) {
      layer.push_back({v});
      gammas.push_back(g.neighbors(v));
      vertices.push_back(v);
    }
  while (!layer.empty()) {
    by_dim.push_back(layer);
    if (static_cast<int>(by_dim.size()) > max_dim) break;
    std::vector<Simplex> next;
    std::vector<Bitset> next_gammas;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const Simplex& s = layer[i];
      auto it = std::upper_bound(vertices.begin(), vertices.end(), s.back());
      for (; it != vertices.end(); ++it) {
        if (gammas[i].count_and(g.neighbors(*it)) < m) continue;
        Simplex t = s;
        t.push_back(*it);
        next.push_back(std::move(t));
        next_gammas.push_back(gammas[i] & g.neighbors(*it));
      }
    }
    layer = std::move(next);
    gammas = std::move(next_gammas);
  }
  return SimplicialComplex::from_faces(n, [&] {
    std::vector<Simplex> all;
    for (auto& l : by_dim)
      for (auto& s : l) all.push_back(std::move(s));
    return all;
  }());
}

SimplicialComplex skeleton(const SimplicialComplex& k, int i) {
  if (i < 0) throw ParameterError("skeleton dimension must be >= 0");
  std::vector<Simplex> faces;
  for (int d = 0; d <= std::min(i, k.dimension()); ++d)
    for (const auto& s : k.simplices(d)) faces.push_back(s);
  return SimplicialComplex::from_faces(k.universe(), std::move(faces));
}

Simplex simplex_closure_v(const Graph& g, std::size_t m, const Simplex& x) {
  check_simplex(x, g.vertex_count());
  const Bitset gamma = common_neighbors_bits(g, x);
  if (gamma.count() < m)
    throw ParameterError("set is not a face of the multineighbor complex");
  if (gamma.none())
    throw ParameterError("closure undefined: set has no common neighbours");
  return to_vertex_set(common_neighbors_bits(g, gamma));
}

std::size_t FacePoset::height() const {
  std::vector<std::size_t> longest(elements.size(), 1);
  std::size_t best = 0;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (less(i, j)) longest[j] = std::max(longest[j], longest[i] + 1);
    best = std::max(best, longest[j]);
  }
  return best;
}

namespace {

void sort_poset(std::vector<Simplex>& elems) {
  std::sort(elems.begin(), elems.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

}  // namespace

FacePoset face_poset(const SimplicialComplex& k) {
  FacePoset p{k.all_simplices()};
  sort_poset(p.elements);
  return p;
}

FacePoset image_poset(const Graph& g, std::size_t m, int max_dim) {
  const SimplicialComplex k = multineighbor_complex(g, m, max_dim);
  FacePoset p;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& x : k.simplices(d)) p.elements.push_back(simplex_closure_v(g, m, x));
  sort_poset(p.elements);
  return p;
}

SimplicialComplex order_complex(const FacePoset& p) {
  const std::size_t n = p.elements.size();
  std::vector<std::vector<Vertex>> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.less(i, j)) up[i].push_back(static_cast<Vertex>(j));

  std::vector<Simplex> chains;
  Simplex chain;
  auto extend = [&](auto&& self, Vertex last) -> void {
    chains.push_back(chain);
    for (Vertex next : up[last]) {
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    chain = {static_cast<Vertex>(i)};
    extend(extend, static_cast<Vertex>(i));
  }
  return SimplicialComplex::from_faces(n, std::move(chains));
}

SimplicialComplex read_complex(std::istream& in) {
  std::vector<Simplex> faces;
  std::string line;
  std::size_t line_no = 0;
  Vertex max_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    Simplex s;
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        if (tok.empty() || tok[0] == '-') throw std::invalid_argument(tok);
        v = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v > UINT32_MAX - 1)
        throw FormatError("complex line " + std::to_string(line_no) +
                          ": bad vertex id '" + tok + "'");
      if (!s.empty() && s.back() >= v)
        throw FormatError("complex line " + std::to_string(line_no) +
                          ": ids must be strictly increasing");
      s.push_back(static_cast<Vertex>(v));
    }
    if (s.empty()) continue;
    max_id = std::max(max_id, s.back());
    faces.push_back(std::move(s));
  }
  const std::size_t universe = faces.empty() ? 0 : std::size_t{max_id} + 1;
  return SimplicialComplex::closure_of(universe, std::move(faces));
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open complex file: " + path);
  return read_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
  for (const auto& s : k.maximal_faces()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

void write_complex_file(const std::string& path, const SimplicialComplex& k) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write complex file: " + path);
  write_complex(out, k);
}

}  // namespace multinbr
