// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "multinbr/classify.hpp"
#include "multinbr/error.hpp"
#include "multinbr/random.hpp"

using namespace multinbr;

namespace {

std::vector<FeatureRow> separable(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<FeatureRow> rows;
  for (int i = 0; i < 20; ++i) rows.push_back({{rng.uniform(0, 0.5), rng.uniform01(), rng.uniform01()}, 0});
  for (int i = 0; i < 20; ++i) rows.push_back({{rng.uniform(1.5, 3), rng.uniform01(), rng.uniform01()}, 1});
  return rows;
}

EvalConfig small_config(std::size_t points, std::size_t reps) {
  EvalConfig c;
  c.dataset.points_per_cloud = points;
  c.dataset.seed = 21;
  c.repetitions = reps;
  c.forest.trees = 30;
  return c;
}

}  // namespace

TEST_CASE("separable features are learned exactly") {
  auto rows = separable(1);
  ForestModel model = train_forest(rows, ForestParams{}, 7);
  CHECK(model.trees.size() == 100);
  CHECK(accuracy(model, rows) == 1.0);
  CHECK(model.predict({0.1, 0.5, 0.5}) == 0);
  CHECK(model.predict({2.5, 0.5, 0.5}) == 1);
}

TEST_CASE("single-class input gives a constant model") {
  std::vector<FeatureRow> rows(6, FeatureRow{{0.2, 0.3, 0.4}, 3});
  rows[2].features = {9, 9, 9};
  ForestModel model = train_forest(rows, ForestParams{}, 1);
  CHECK(model.constant);
  CHECK(model.constant_label == 3);
  CHECK(accuracy(model, rows) == 1.0);
}

TEST_CASE("contradictory labels cannot beat the majority prior") {
  std::vector<FeatureRow> rows;
  for (int i = 0; i < 7; ++i) rows.push_back({{1, 1, 1}, 0});
  for (int i = 0; i < 5; ++i) rows.push_back({{1, 1, 1}, 1});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ForestModel model = train_forest(rows, ForestParams{}, seed);
    CHECK(accuracy(model, rows) <= 7.0 / 12.0);
  }
  // equal priors and identical features: every tree votes on a tie
  std::vector<FeatureRow> tie = {{{0, 0, 0}, 2}, {{0, 0, 0}, 1}, {{0, 0, 0}, 2}, {{0, 0, 0}, 1}};
  ForestParams one{1, 8, 2};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ForestModel m = train_forest(tie, one, seed);
    CHECK(accuracy(m, tie) <= 0.5);
  }
}

TEST_CASE("leaf histograms are consistent") {
  auto rows = separable(4);
  ForestModel model = train_forest(rows, ForestParams{5, 3, 2}, 3);
  for (const auto& tree : model.trees) {
    std::uint32_t leaf_total = 0;
    for (const auto& node : tree.nodes) {
      if (node.feature >= 0) continue;
      std::uint32_t sum = 0, best = 0;
      for (auto c : node.counts) {
        sum += c;
        best = std::max(best, c);
      }
      CHECK(sum > 0);
      CHECK(node.counts[static_cast<std::size_t>(node.majority)] == best);
      for (int c = 0; c < node.majority; ++c) CHECK(node.counts[static_cast<std::size_t>(c)] < best);
      leaf_total += sum;
    }
    CHECK(leaf_total == rows.size());
  }
}

TEST_CASE("training is deterministic and validated") {
  auto rows = separable(2);
  rows[0].label = 1;
  rows[25].label = 0;
  ForestModel a = train_forest(rows, ForestParams{}, 11), b = train_forest(rows, ForestParams{}, 11);
  for (const auto& r : separable(99)) CHECK(a.predict(r.features) == b.predict(r.features));
  CHECK_THROWS_AS(train_forest(std::span(rows).first(3), ForestParams{}, 1), ParameterError);
  rows[3].features[1] = NAN;
  CHECK_THROWS_AS(train_forest(rows, ForestParams{}, 1), ParameterError);
  rows[3].features[1] = 0;
  rows[3].label = -1;
  CHECK_THROWS_AS(train_forest(rows, ForestParams{}, 1), ParameterError);
  CHECK_THROWS_AS(accuracy(a, {}), ParameterError);
}

TEST_CASE("method parsing") {
  auto ms = parse_methods("m1,m4,rips,multinbr_m5");
  REQUIRE(ms.size() == 4);
  CHECK(ms[1] == Method{Method::Kind::kMultinbr, 4});
  CHECK(ms[2].kind == Method::Kind::kRips);
  CHECK(ms[3].name() == "multinbr_m5");
  CHECK(ms[2].name() == "rips");
  CHECK_THROWS_AS(parse_methods("m0"), ParameterError);
  CHECK_THROWS_AS(parse_methods("alpha"), ParameterError);
  CHECK_THROWS_AS(parse_methods(""), ParameterError);
}

TEST_CASE("evaluation is deterministic and in range") {
  EvalConfig cfg = small_config(16, 1);
  LabeledDataset ds = build_dataset(cfg.dataset);
  auto methods = parse_methods("m2,rips");
  auto r1 = evaluate_methods(ds, methods, cfg);
  auto r2 = evaluate_methods(ds, methods, cfg);
  REQUIRE(r1.size() == 2);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(r1[j].accuracies == r2[j].accuracies);
    CHECK(r1[j].mean >= 0.0);
    CHECK(r1[j].mean <= 1.0);
  }
  cfg.jobs = 3;
  cfg.repetitions = 3;
  auto par = evaluate_methods(ds, methods, cfg);
  cfg.jobs = 1;
  auto seq = evaluate_methods(ds, methods, cfg);
  for (std::size_t j = 0; j < 2; ++j) CHECK(par[j].accuracies == seq[j].accuracies);
  CHECK(evaluate_accuracy(ds, methods[1], cfg) == seq[1].mean);

  std::ostringstream out;
  write_results_csv(out, 16, seq);
  CHECK(out.str().rfind("points,method,mean_accuracy,std_accuracy,repetitions\n16,multinbr_m2,", 0) == 0);

  cfg.train_fraction = 1.0;
  CHECK_THROWS_AS(evaluate_methods(ds, methods, cfg), ParameterError);
  cfg.train_fraction = 0.75;
  cfg.max_degree = 3;
  CHECK_THROWS_AS(evaluate_methods(ds, methods, cfg), ParameterError);
}

TEST_CASE("cloud features are computed per method") {
  EvalConfig cfg = small_config(16, 1);
  PointCloud x = sample_shape(default_shape_spec(ShapeKind::kTorus, 16));
  auto methods = parse_methods("m1,m16,rips");
  CloudFeatures f = cloud_features(x, methods, cfg);
  REQUIRE(f.values.size() == 3);
  CHECK(f.valid[0]);
  CHECK_FALSE(f.valid[1]);  // m = |X| leaves no simplex with enough outside points
  CHECK(f.valid[2]);
  for (double v : f.values[2]) CHECK(v >= 0.0);
}

TEST_CASE("label-shuffled control is near chance") {
  EvalConfig cfg = small_config(16, 20);
  cfg.shuffle_labels = true;
  LabeledDataset ds = build_dataset(cfg.dataset);
  auto r = evaluate_methods(ds, parse_methods("rips"), cfg);
  CHECK(std::abs(r[0].mean - 1.0 / 6.0) <= 0.1);
}
