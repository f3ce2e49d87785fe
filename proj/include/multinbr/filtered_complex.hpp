// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "multinbr/complex.hpp"
#include "multinbr/simplex.hpp"

namespace multinbr {

struct FilteredSimplex {
  Simplex vertices;
  double grade = 0.0;

  int dim() const { return simplex_dim(vertices); }
  bool operator==(const FilteredSimplex&) const = default;
};

/// Filtration order: grade, then dimension, then lexicographic ids. Faces
/// always precede cofaces of equal grade under this order.
inline bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.grade != b.grade) return a.grade < b.grade;
  if (a.vertices.size() != b.vertices.size())
    return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

/// Simplices with real grades, kept in filtration order.
struct FilteredComplex {
  std::size_t universe = 0;
  std::vector<FilteredSimplex> simplices;

  /// Sorts `simplices` into filtration order.
  void sort();
  bool empty() const { return simplices.empty(); }
  int dimension() const;

  /// Distinct grades, ascending.
  std::vector<double> critical_grades() const;

  /// The subcomplex of simplices with grade <= r.
  SimplicialComplex snapshot(double r) const;
};

}  // namespace multinbr
