// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "multinbr/complex.hpp"
#include "multinbr/filtered_complex.hpp"

namespace multinbr {

/// Reduced Betti numbers over GF(2), index = homology degree.
struct BettiVector {
  std::vector<std::size_t> values;

  std::size_t operator[](std::size_t q) const {
    return q < values.size() ? values[q] : 0;
  }
  bool operator==(const BettiVector&) const = default;
};

/// Reduced GF(2) Betti numbers of K in degrees 0..max_degree. A single point
/// has all-zero reduced Betti numbers; so does the empty complex.
BettiVector betti_numbers(const SimplicialComplex& k, int max_degree);

/// Sparse GF(2) matrix, one sorted row-index list per column.
struct BoundaryMatrix {
  std::vector<std::vector<std::uint32_t>> columns;
};

/// Boundary matrix of F's simplices of dimension <= max_simplex_dim, in
/// filtration order. Throws StructuralError if F is unsorted or a face is
/// missing or appears after one of its cofaces.
BoundaryMatrix boundary_matrix(const FilteredComplex& f, int max_simplex_dim);

inline constexpr std::uint32_t kNoPivot = UINT32_MAX;

/// Left-to-right column reduction in place. Returns low(j) per column
/// (kNoPivot for columns reduced to zero).
std::vector<std::uint32_t> reduce(BoundaryMatrix& m);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePoint {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  bool infinite() const { return std::isinf(death); }
  double length() const { return death - birth; }
  auto operator<=>(const PersistencePoint&) const = default;
};

struct PersistenceDiagram {
  std::vector<PersistencePoint> points;  // sorted by (dim, birth, death)

  std::vector<PersistencePoint> in_dim(int dim) const;
  bool operator==(const PersistenceDiagram&) const = default;
};

/// Persistent homology of F in degrees 0..max_degree by plain column
/// reduction of the boundary matrix. Degree 0 is unreduced (one infinite bar
/// per final component); zero-length pairs are dropped.
PersistenceDiagram persistence(const FilteredComplex& f, int max_degree);

/// Same diagram as persistence(), computed by reducing the coboundary
/// matrix with clearing. Much faster on large dense filtrations.
PersistenceDiagram persistence_cohomology(const FilteredComplex& f,
                                          int max_degree);

/// Number of points of degree `dim` alive at grade r (birth <= r < death).
std::size_t diagram_snapshot_betti(const PersistenceDiagram& d, double r,
                                   int dim);

// CSV: "dim,birth,death", death "inf" for infinite bars, 17 significant
// digits, rows sorted by (dim, birth, death).
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& d);
void write_diagram_csv_file(const std::string& path,
                            const PersistenceDiagram& d);
PersistenceDiagram read_diagram_csv(std::istream& in);
PersistenceDiagram read_diagram_csv_file(const std::string& path);

}  // namespace multinbr
