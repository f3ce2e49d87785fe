// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "multinbr/features.hpp"
#include "multinbr/shapes.hpp"

namespace multinbr {

struct FeatureRow {
  std::array<double, 3> features{};
  int label = 0;
};

struct ForestParams {
  std::size_t trees = 100;
  int max_depth = 8;
  std::size_t features_per_split = 2;
};

// Flat binary tree; a node is a leaf iff feature < 0.
struct DecisionTree {
  struct Node {
    int feature = -1;
    double threshold = 0.0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::vector<std::uint32_t> counts;  // class histogram of the samples reaching a leaf
    int majority = 0;
  };
  std::vector<Node> nodes;

  int predict(const std::array<double, 3>& x) const;
};

struct ForestModel {
  ForestParams params;
  std::uint64_t seed = 0;
  int class_count = 0;
  bool constant = false;  // single-class training data
  int constant_label = 0;
  std::vector<DecisionTree> trees;

  int predict(const std::array<double, 3>& x) const;
};

/// Bagged CART trees with Gini splits. Needs at least 4 rows and labels >= 0.
ForestModel train_forest(std::span<const FeatureRow> rows,
                         const ForestParams& params, std::uint64_t seed);

double accuracy(const ForestModel& model, std::span<const FeatureRow> rows);

struct Method {
  enum class Kind { kMultinbr, kRips };
  Kind kind = Kind::kMultinbr;
  std::size_t m = 1;

  std::string name() const;  // "multinbr_m<m>" or "rips"
  bool operator==(const Method&) const = default;
};

std::vector<Method> parse_methods(const std::string& list);  // "m1,m4,rips"

struct EvalConfig {
  DatasetConfig dataset;
  std::size_t repetitions = 20;
  double train_fraction = 0.75;
  int max_dim = 3;
  int max_degree = 2;
  EntropyOptions entropy;
  ForestParams forest;
  bool shuffle_labels = false;  // control: permute training labels
  unsigned jobs = 1;
};

struct MethodResult {
  Method method;
  std::vector<double> accuracies;  // one per repetition
  double mean = 0.0;
  double std_dev = 0.0;            // sample standard deviation
  std::size_t dropped_rows = 0;    // clouds whose filtration was empty
};

/// Per-cloud entropy vectors for every method, computed from one shared
/// multineighbour enumeration plus one Rips filtration. `valid[i]` is false
/// when that method's filtration of the cloud is empty.
struct CloudFeatures {
  std::vector<std::array<double, 3>> values;
  std::vector<bool> valid;
};
CloudFeatures cloud_features(const PointCloud& x, std::span<const Method> methods,
                             const EvalConfig& config);

/// Repetition r uses noise seeds starting at dataset.seed + r * cloud_count
/// (r = 0 is `dataset` itself), a stratified split and a forest seeded from
/// that base. All methods share the clouds and the split of a repetition.
std::vector<MethodResult> evaluate_methods(const LabeledDataset& dataset,
                                           std::span<const Method> methods,
                                           const EvalConfig& config);

double evaluate_accuracy(const LabeledDataset& dataset, const Method& method,
                         const EvalConfig& config);

// CSV with header "points,method,mean_accuracy,std_accuracy,repetitions".
void write_results_csv(std::ostream& out, std::size_t points,
                       const std::vector<MethodResult>& results);
void write_results_csv_file(const std::string& path, std::size_t points,
                            const std::vector<MethodResult>& results);

}  // namespace multinbr
