// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "multinbr/graph.hpp"
#include "multinbr/simplex.hpp"

namespace multinbr {

inline constexpr int kDefaultMaxDim = 3;

/// Downward-closed family of simplices on vertices 0..universe-1, stored per
/// dimension in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::size_t universe) : universe_(universe) {}

  /// Builds a complex from arbitrary faces, adding every missing face.
  static SimplicialComplex closure_of(std::size_t universe,
                                      std::vector<Simplex> faces);

  /// Builds a complex from a face list that must already be downward
  /// closed; throws StructuralError otherwise.
  static SimplicialComplex from_faces(std::size_t universe,
                                      std::vector<Simplex> faces);

  std::size_t universe() const { return universe_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  /// Simplices of dimension d (empty span if d > dimension()).
  const std::vector<Simplex>& simplices(int d) const;
  std::size_t size() const;
  /// f-vector: f[q] = number of q-simplices.
  std::vector<std::size_t> face_counts() const;
  bool contains(const Simplex& s) const;
  /// Faces not properly contained in another face, lexicographic order.
  std::vector<Simplex> maximal_faces() const;
  /// Every face in (dimension, lexicographic) order.
  std::vector<Simplex> all_simplices() const;

  bool operator==(const SimplicialComplex& o) const {
    return by_dim_ == o.by_dim_;
  }

 private:
  static SimplicialComplex from_sorted_dims(
      std::size_t universe, std::vector<std::vector<Simplex>> by_dim);

  std::size_t universe_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
};

/// The full simplex on n vertices truncated at max_dim (Delta^{n-1} when
/// max_dim >= n-1).
SimplicialComplex full_simplex(std::size_t n, int max_dim);

/// N_m(G) truncated at max_dim: sigma is a face iff |Gamma(sigma)| >= m.
/// Built dimension by dimension, only extending faces already accepted.
SimplicialComplex multineighbor_complex(const Graph& g, std::size_t m,
                                        int max_dim = kDefaultMaxDim);

SimplicialComplex skeleton(const SimplicialComplex& k, int i);

/// v(X) = Gamma^2(X) for a face X of N_m(G). The result is again a face of
/// N_m(G) (possibly of larger dimension than X). Throws ParameterError if X
/// is not a face of N_m(G) or Gamma(X) is empty.
Simplex simplex_closure_v(const Graph& g, std::size_t m, const Simplex& x);

/// Finite poset of vertex sets ordered by strict inclusion. Elements are
/// kept sorted by (size, lexicographic), so every chain is increasing in
/// element index.
struct FacePoset {
  std::vector<Simplex> elements;

  bool less(std::size_t i, std::size_t j) const {
    return is_proper_face(elements[i], elements[j]);
  }
  /// Length (number of elements) of the longest chain.
  std::size_t height() const;
};

FacePoset face_poset(const SimplicialComplex& k);

/// { v(X) : X a face of N_m(G) up to max_dim }.
FacePoset image_poset(const Graph& g, std::size_t m,
                      int max_dim = kDefaultMaxDim);

/// Chains of P as simplices on the element indices of P.
SimplicialComplex order_complex(const FacePoset& p);

// Text format: one maximal face per line, ids separated by spaces.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& k);
void write_complex_file(const std::string& path, const SimplicialComplex& k);

}  // namespace multinbr
