// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/filtered_complex.hpp"

#include <algorithm>
#include <cstdint>

namespace multinbr {

void FilteredComplex::sort() {
  // Fast path: up to four 16-bit ids packed big-endian compare like the
  // lexicographic order among simplices of equal size.
  bool packable = true;
  for (const auto& s : simplices)
    if (s.vertices.size() > 4 || s.vertices.empty() || s.vertices.back() > 0xffff) {
      packable = false;
      break;
    }
  if (!packable) {
    std::sort(simplices.begin(), simplices.end(), filtration_less);
    return;
  }
  struct Key {
    double grade;
    std::uint32_t size;
    std::uint64_t code;
    std::uint32_t pos;
  };
  std::vector<Key> keys;
  keys.reserve(simplices.size());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& v = simplices[i].vertices;
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < 4; ++k)
      code = (code << 16) | (k < v.size() ? v[k] : 0);
    keys.push_back({simplices[i].grade, static_cast<std::uint32_t>(v.size()),
                    code, static_cast<std::uint32_t>(i)});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    if (a.size != b.size) return a.size < b.size;
    return a.code < b.code;
  });
  std::vector<FilteredSimplex> sorted;
  sorted.reserve(simplices.size());
  for (const auto& k : keys) sorted.push_back(std::move(simplices[k.pos]));
  simplices = std::move(sorted);
}

int FilteredComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, s.dim());
  return d;
}

std::vector<double> FilteredComplex::critical_grades() const {
  std::vector<double> g;
  g.reserve(simplices.size());
  for (const auto& s : simplices) g.push_back(s.grade);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

SimplicialComplex FilteredComplex::snapshot(double r) const {
  std::vector<Simplex> faces;
  for (const auto& s : simplices)
    if (s.grade <= r) faces.push_back(s.vertices);
  return SimplicialComplex::from_faces(universe, std::move(faces));
}

}  // namespace multinbr
