// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "multinbr/error.hpp"
#include "multinbr/features.hpp"
#include "multinbr/filtration.hpp"
#include "multinbr/random.hpp"

using namespace multinbr;

namespace {

PersistenceDiagram bars(int dim, const std::vector<double>& lengths, double birth = 0.0) {
  PersistenceDiagram d;
  for (double l : lengths) d.points.push_back({dim, birth, birth + l});
  return d;
}

double direct_entropy(const std::vector<double>& lengths) {
  double total = 0;
  for (double l : lengths) total += l;
  double e = 0;
  for (double l : lengths) e -= l / total * std::log(l / total);
  return e;
}

}  // namespace

TEST_CASE("persistence_entropy examples") {
  CHECK(persistence_entropy(bars(0, {3.7}), 0) == 0.0);
  CHECK(std::abs(persistence_entropy(bars(1, {2, 2}), 1) - std::log(2.0)) < 1e-12);
  const double expected = -0.25 * std::log(0.25) - 0.75 * std::log(0.75);
  CHECK(std::abs(persistence_entropy(bars(0, {1, 3}), 0) - expected) < 1e-12);
  CHECK(std::abs(expected - 0.562335) < 1e-6);
  CHECK(persistence_entropy(PersistenceDiagram{}, 0) == 0.0);
}

TEST_CASE("infinite bars") {
  PersistenceDiagram d = bars(0, {1, 3});
  d.points.push_back({0, 0, kInfinity});
  CHECK(persistence_entropy(d, 0) == persistence_entropy(bars(0, {1, 3}), 0));
  EntropyOptions cap{InfiniteBars::kCap, 4.0};
  CHECK(std::abs(persistence_entropy(d, 0, cap) - direct_entropy({1, 3, 4})) < 1e-12);
  // a bar born at or after the cap has no length
  PersistenceDiagram late{{{0, 5, kInfinity}, {0, 0, 1}}};
  CHECK(persistence_entropy(late, 0, cap) == 0.0);
}

TEST_CASE("feature_vector examples") {
  EntropyVector e = feature_vector(PersistenceDiagram{});
  CHECK(e.values == std::vector<double>{0, 0, 0});
  EntropyVector two = feature_vector(bars(0, {1, 1}));
  CHECK(std::abs(two.values[0] - std::log(2.0)) < 1e-12);
  CHECK(two.values[1] == 0);
  CHECK(two.values[2] == 0);
  PointCloud collinear{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
  EntropyVector c = feature_vector(persistence(multinbr_filtration_r(collinear, 1, 3), 2));
  CHECK(c.values == std::vector<double>{0, 0, 0});
}

TEST_CASE("entropy is scale invariant and bounded by ln n") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> lengths;
    const std::size_t n = 1 + rng.below(12);
    for (std::size_t i = 0; i < n; ++i) lengths.push_back(0.01 + rng.uniform01() * 5);
    PersistenceDiagram d = bars(1, lengths, rng.uniform01());
    const double e = persistence_entropy(d, 1);
    CHECK(e >= 0.0);
    CHECK(e <= std::log(static_cast<double>(n)) + 1e-12);
    if (n > 1) CHECK(e < std::log(static_cast<double>(n)));
    const double c = 0.001 + rng.uniform01() * 100;
    PersistenceDiagram scaled = d;
    for (auto& p : scaled.points) {
      p.birth *= c;
      p.death *= c;
    }
    CHECK(std::abs(persistence_entropy(scaled, 1) - e) < 1e-12);
    if (n >= 2) CHECK(std::abs(e - direct_entropy(lengths)) < 1e-12);
  }
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<double> equal(n, 0.7);
    CHECK(std::abs(persistence_entropy(bars(2, equal), 2) - std::log(static_cast<double>(n))) < 1e-12);
  }
}

TEST_CASE("entropy is continuous at the diagonal") {
  const std::vector<double> rest = {1.0, 2.0, 4.0};
  const double limit = persistence_entropy(bars(1, rest), 1);
  double prev = INFINITY;
  for (int k = 1; k <= 8; ++k) {
    std::vector<double> lengths = rest;
    lengths.push_back(std::pow(10.0, -k));
    const double gap = std::abs(persistence_entropy(bars(1, lengths), 1) - limit);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("feature csv round trip") {
  std::vector<FeatureRecord> rows = {{"circle", {{0.1, 0.2, 0.0}}}, {"torus", {{1.0 / 3, 0, 2}}}};
  std::stringstream ss;
  write_feature_csv(ss, rows);
  CHECK(ss.str().rfind("label,e0,e1,e2\n", 0) == 0);
  auto back = read_feature_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[1].label == "torus");
  CHECK(back[1].entropies.values == rows[1].entropies.values);
  std::istringstream bad("label,e0,e1,e2\nx,1,2\n");
  CHECK_THROWS_AS(read_feature_csv(bad), FormatError);
}
