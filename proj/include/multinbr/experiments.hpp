// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "multinbr/graph.hpp"

namespace multinbr {

// C(n,i) (1 - p^{mi})^{C(n-i,m)}, evaluated in log space.
double connectivity_bound(std::size_t n, double p, std::size_t m, std::size_t i);

// C(n,i) P(Bin(n-i, p^i) < m): the union bound over i-sets with the exact
// per-set probability of having fewer than m common neighbours.
double neighborly_union_bound(std::size_t n, double p, std::size_t m, std::size_t i);

// Fraction of trials in which some i-subset of G(n,p) has fewer than m
// common neighbours. Exhaustive over i-subsets, so i <= 3.
double mc_neighborly_failure(std::size_t n, double p, std::size_t m, std::size_t i,
                             std::size_t trials, std::uint64_t seed, unsigned jobs = 1);

struct SweepRow {
  std::size_t n = 0;
  std::string param;
  std::string degree_or_pattern;
  std::size_t hits = 0;
  std::size_t trials = 0;
  double bound = 0.0;  // NaN when no bound applies
  std::vector<std::string> flags;

  double frequency() const {
    return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
  }
  bool has_flag(const std::string& f) const;
};

struct SweepSummary {
  std::vector<std::string> notes;  // written as '#' lines above the header
  std::vector<SweepRow> rows;

  bool operator==(const SweepSummary&) const;
};

// One record per cell: "n,param,degree_or_pattern,frequency,trials,bound,flags",
// flags joined by '|'.
void write_sweep_report(std::ostream& out, const SweepSummary& s);
void write_sweep_report_file(const std::string& path, const SweepSummary& s);

struct PRule {
  enum class Kind { kConstant, kPower };
  Kind kind = Kind::kConstant;
  double value = 0.5;  // p, or the exponent alpha in p = n^alpha

  double p(std::size_t n) const;
  std::string describe() const;  // "p=0.5" or "alpha=-0.5"
};

inline constexpr std::size_t kSweepMaxN = 200;
inline constexpr int kSweepMaxDegree = 2;

// Per (n, p, m, i) cell: mc_neighborly_failure against connectivity_bound.
// degree_or_pattern is "m<m>_i<i>"; flags carry the corrected union bound.
SweepSummary neighborly_sweep(const std::vector<std::size_t>& n_grid,
                              const std::vector<double>& p_grid,
                              const std::vector<std::size_t>& m_grid,
                              const std::vector<std::size_t>& i_grid, std::size_t trials,
                              std::uint64_t seed, unsigned jobs = 1);

// Per (n, l): fraction of trials with reduced Betti number l of N_m(G(n,p(n)))
// nonzero. Trial t uses seed + t. Flags mark the vanishing ranges predicted
// for the cell and carry an "empty=<count>" counter of empty complexes.
SweepSummary mc_vanishing_sweep(const std::vector<std::size_t>& n_grid, const PRule& rule,
                                std::size_t m, const std::vector<int>& degrees,
                                std::size_t trials, std::uint64_t seed, double eps = 0.1,
                                unsigned jobs = 1);

// Integers k >= 3 strictly inside ((2m+2)/(2m+1) + eps) log2 n < k < (2 - eps) log2 n.
std::vector<std::size_t> window_orders(std::size_t n, std::size_t m, double eps);

// True iff g has a maximal clique of order k that does not extend to X_{k,m}.
bool has_sphere_premise(const Graph& g, std::size_t k, std::size_t m);

// p = 1/2. Rows "premise_k<k>" per window order, and "betti_<k-2>" where
// k - 2 <= 2; windows with no admissible k yield one "window_empty" row.
SweepSummary mc_nonvanishing_window(const std::vector<std::size_t>& n_grid, std::size_t m,
                                    double eps, std::size_t trials, std::uint64_t seed,
                                    unsigned jobs = 1);

// Triangle 0-1-2 with the pendant path 0-3-4-5 attached.
Graph sphere_fixture();

// Per (alpha, n): frequencies of K_{k+2} and X_{k+2,m} in G(n, n^alpha);
// bound = the pattern's threshold exponent -1/lambda.
SweepSummary subgraph_threshold_check(std::size_t k, std::size_t m,
                                      const std::vector<double>& alpha_grid,
                                      const std::vector<std::size_t>& n_grid,
                                      std::size_t trials, std::uint64_t seed,
                                      unsigned jobs = 1);

}  // namespace multinbr
