// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "multinbr/graph.hpp"

namespace multinbr {

/// Nonempty strictly increasing vertex list; dimension = size - 1.
using Simplex = std::vector<Vertex>;

inline int simplex_dim(const Simplex& s) {
  return static_cast<int>(s.size()) - 1;
}

/// Strict (a != b) subset test on sorted vertex lists.
bool is_proper_face(const Simplex& a, const Simplex& b);

/// Codimension-one faces of s in lexicographic order (empty for a vertex).
std::vector<Simplex> facets(const Simplex& s);

/// Maps simplices on a fixed vertex universe to dense ids via the
/// combinatorial number system. Backed by a flat array while the key space
/// is small, and a hash map otherwise.
class SimplexIndex {
 public:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  SimplexIndex(std::size_t universe, int max_dim);

  void insert(const Simplex& s, std::uint32_t id);
  std::uint32_t find(const Simplex& s) const;

  /// Key of s with vertex `extra` (not in s) added, without materialising it.
  std::uint32_t find_with(const Simplex& s, Vertex extra) const;

 private:
  std::uint64_t binom(std::size_t n, std::size_t k) const {
    return binom_[k * (universe_ + 1) + n];
  }
  std::uint64_t key(const Simplex& s) const;
  std::uint32_t lookup(int dim, std::uint64_t key) const;

  std::size_t universe_;
  int max_dim_;
  std::vector<std::uint64_t> binom_;
  std::vector<std::vector<std::uint32_t>> dense_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> sparse_;
};

}  // namespace multinbr
