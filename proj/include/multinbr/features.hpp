// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "multinbr/homology.hpp"

namespace multinbr {

/// How infinite bars enter the entropy.
enum class InfiniteBars {
  kDrop,  ///< ignored (default)
  kCap,   ///< death replaced by EntropyOptions::cap
};

struct EntropyOptions {
  InfiniteBars infinite_bars = InfiniteBars::kDrop;
  double cap = 0.0;
};

/// Shannon entropy of the normalised bar lengths of the finite,
/// off-diagonal points of degree `dim`. Zero when fewer than two bars.
double persistence_entropy(const PersistenceDiagram& d, int dim,
                           const EntropyOptions& opts = {});

/// Entropies E_0..E_max_deg.
struct EntropyVector {
  std::vector<double> values;
};

EntropyVector feature_vector(const PersistenceDiagram& d,
                             const EntropyOptions& opts = {}, int max_deg = 2);

struct FeatureRecord {
  std::string label;
  EntropyVector entropies;
};

// CSV with header "label,e0,e1,e2".
void write_feature_csv(std::ostream& out, const std::vector<FeatureRecord>& rows);
void write_feature_csv_file(const std::string& path,
                            const std::vector<FeatureRecord>& rows);
std::vector<FeatureRecord> read_feature_csv(std::istream& in);

}  // namespace multinbr
