// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/simplex.hpp"

#include <algorithm>

#include "multinbr/error.hpp"

namespace multinbr {

namespace {
constexpr std::uint64_t kSaturated = UINT64_MAX;
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 23;
}  // namespace

bool is_proper_face(const Simplex& a, const Simplex& b) {
  return a.size() < b.size() &&
         std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Simplex> facets(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  out.reserve(s.size());
  // Dropping vertices from the back first yields lexicographic order.
  for (std::size_t skip = s.size(); skip-- > 0;) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != skip) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplexIndex::SimplexIndex(std::size_t universe, int max_dim)
    : universe_(universe), max_dim_(max_dim) {
  if (max_dim < 0) throw ParameterError("SimplexIndex needs max_dim >= 0");
  const std::size_t kmax = static_cast<std::size_t>(max_dim) + 1;
  binom_.assign((kmax + 1) * (universe_ + 1), 0);
  for (std::size_t n = 0; n <= universe_; ++n) {
    binom_[n] = 1;  // C(n, 0)
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (n == 0) continue;
      const std::uint64_t a = binom_[(k - 1) * (universe_ + 1) + (n - 1)];
      const std::uint64_t b = binom_[k * (universe_ + 1) + (n - 1)];
      binom_[k * (universe_ + 1) + n] =
          (a == kSaturated || b == kSaturated || a > kSaturated - b) ? kSaturated
                                                                      : a + b;
    }
  }
  dense_.resize(kmax);
  sparse_.resize(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const std::uint64_t space = binom(universe_, k);
    if (space == kSaturated)
      throw CapacityError("simplex key space overflows 64 bits");
    if (space <= kDenseLimit) dense_[k - 1].assign(space, kAbsent);
  }
}

std::uint64_t SimplexIndex::key(const Simplex& s) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) k += binom(s[i], i + 1);
  return k;
}

std::uint32_t SimplexIndex::lookup(int dim, std::uint64_t k) const {
  const auto& dense = dense_[static_cast<std::size_t>(dim)];
  if (!dense.empty()) return dense[k];
  const auto& sparse = sparse_[static_cast<std::size_t>(dim)];
  auto it = sparse.find(k);
  return it == sparse.end() ? kAbsent : it->second;
}

void SimplexIndex::insert(const Simplex& s, std::uint32_t id) {
  const int d = simplex_dim(s);
  if (d < 0 || d > max_dim_ || s.back() >= universe_)
    throw ParameterError("simplex outside index range");
  auto& dense = dense_[static_cast<std::size_t>(d)];
  if (!dense.empty())
    dense[key(s)] = id;
  else
    sparse_[static_cast<std::size_t>(d)][key(s)] = id;
}

std::uint32_t SimplexIndex::find(const Simplex& s) const {
  const int d = simplex_dim(s);
  if (d < 0 || d > max_dim_ || s.back() >= universe_) return kAbsent;
  return lookup(d, key(s));
}

std::uint32_t SimplexIndex::find_with(const Simplex& s, Vertex extra) const {
  const int d = simplex_dim(s) + 1;
  if (d > max_dim_ || extra >= universe_) return kAbsent;
  std::uint64_t k = 0;
  std::size_t pos = 0;
  bool placed = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!placed && extra < s[i]) {
      k += binom(extra, pos + 1);
      ++pos;
      placed = true;
    }
    k += binom(s[i], pos + 1);
    ++pos;
  }
  if (!placed) k += binom(extra, pos + 1);
  return lookup(d, k);
}

}  // namespace multinbr
