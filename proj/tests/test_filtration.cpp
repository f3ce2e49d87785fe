// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "multinbr/error.hpp"
#include "multinbr/filtration.hpp"
#include "multinbr/homology.hpp"
#include "multinbr/random.hpp"
#include "oracles.hpp"

using namespace multinbr;

namespace {

PointCloud random_cloud(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  PointCloud x;
  for (std::size_t i = 0; i < n; ++i)
    x.points.push_back({rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)});
  return x;
}

PointCloud collinear() { return {{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}}; }

std::map<Simplex, double> grades(const FilteredComplex& f) {
  std::map<Simplex, double> out;
  for (const auto& s : f.simplices) out[s.vertices] = s.grade;
  return out;
}

void check_monotone(const FilteredComplex& f) {
  auto g = grades(f);
  for (const auto& s : f.simplices) {
    for (const auto& face : facets(s.vertices)) {
      REQUIRE(g.count(face) == 1);
      CHECK(g[face] <= s.grade);
    }
  }
  for (std::size_t i = 1; i < f.simplices.size(); ++i)
    CHECK_FALSE(filtration_less(f.simplices[i], f.simplices[i - 1]));
}

}  // namespace

TEST_CASE("proximity_graph uses the strict rule") {
  CHECK(proximity_graph(collinear(), 1).edge_count() == 0);
  Graph g = proximity_graph(collinear(), 1.5);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(proximity_graph(random_cloud(8, 1), 0).edge_count() == 0);
}

TEST_CASE("multinbr_filtration_r worked examples") {
  auto g = grades(multinbr_filtration_r(collinear(), 1, 3));
  std::map<Simplex, double> expected = {
      {{0}, 1}, {{1}, 1}, {{2}, 1}, {{0, 2}, 1}, {{0, 1}, 2}, {{1, 2}, 2}};
  CHECK(g == expected);

  PointCloud x = random_cloud(5, 4);
  CHECK(multinbr_filtration_r(x, 5, 3).empty());
  CHECK(multinbr_filtration_r(x, 9, 3).empty());

  PointCloud square{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}};
  auto sq = grades(multinbr_filtration_r(square, 1, 1));
  for (Vertex v = 0; v < 4; ++v) CHECK(sq[{v}] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sq[{0, 1}] == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq[{1, 2}] == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq[{2, 3}] == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq[{0, 3}] == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq[{0, 2}] == doctest::Approx(1.0));
  CHECK(sq[{1, 3}] == doctest::Approx(1.0));
  CHECK_THROWS_AS(multinbr_filtration_r(square, 0, 1), ParameterError);
}

TEST_CASE("multinbr_filtration_r grades match the brute-force formula") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    PointCloud x = random_cloud(8, 40 + seed);
    for (std::size_t m = 1; m <= 3; ++m) {
      FilteredComplex f = multinbr_filtration_r(x, m, 3);
      check_monotone(f);
      const double r_max = diameter(x);
      std::size_t expected_count = 0;
      for (const auto& s : oracle::subsets_up_to(8, 4)) {
        const double gr = oracle::multinbr_grade(x, s, m);
        if (gr >= 0 && gr <= r_max) ++expected_count;
      }
      CHECK(f.simplices.size() == expected_count);
      for (const auto& s : f.simplices) CHECK(s.grade == oracle::multinbr_grade(x, s.vertices, m));
    }
  }
}

TEST_CASE("shared enumeration agrees with single-m filtrations") {
  PointCloud x = random_cloud(11, 77);
  std::vector<std::size_t> ms = {1, 3, 5};
  auto fs = multinbr_filtrations_r(x, ms, 3);
  REQUIRE(fs.size() == 3);
  for (std::size_t i = 0; i < ms.size(); ++i) CHECK(fs[i].simplices == multinbr_filtration_r(x, ms[i], 3).simplices);
  auto capped = multinbr_filtration_r(x, 2, 3, 0.8);
  for (const auto& s : capped.simplices) CHECK(s.grade <= 0.8);
}

TEST_CASE("m-monotonicity of grades") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PointCloud x = random_cloud(9, 90 + seed);
    for (std::size_t m = 1; m <= 3; ++m) {
      auto lo = grades(multinbr_filtration_r(x, m, 3, 1e9));
      auto hi = grades(multinbr_filtration_r(x, m + 1, 3, 1e9));
      for (const auto& [s, g] : hi) {
        REQUIRE(lo.count(s) == 1);
        CHECK(lo[s] <= g);
      }
    }
  }
}

TEST_CASE("snapshot equivalence with the proximity-graph complex") {
  const double eps = 1e-9;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PointCloud x = random_cloud(6 + seed % 7, 200 + seed);
    for (std::size_t m = 1; m <= 2; ++m) {
      FilteredComplex f = multinbr_filtration_r(x, m, 3, 1e9);
      for (double r : f.critical_grades()) {
        SimplicialComplex direct = multineighbor_complex(proximity_graph(x, r + eps), m, 3);
        CHECK(f.snapshot(r) == direct);
      }
    }
  }
}

TEST_CASE("multinbr_filtration_m") {
  const double a = 1.0;
  PointCloud tet{{{0, 0, 0},
                  {a, 0, 0},
                  {a / 2, a * std::sqrt(3.0) / 2, 0},
                  {a / 2, a * std::sqrt(3.0) / 6, a * std::sqrt(2.0 / 3.0)}}};
  auto g = grades(multinbr_filtration_m(tet, 1.5, 3, 3));
  CHECK(g.size() == 14);
  for (const auto& [s, v] : g) {
    if (s.size() == 1) CHECK(v == 0);
    if (s.size() == 2) CHECK(v == 1);
    if (s.size() == 3) CHECK(v == 2);
  }
  CHECK(multinbr_filtration_m(tet, 0.5, 3, 3).empty());
  FilteredComplex one = multinbr_filtration_m(tet, 1.5, 1, 3);
  for (const auto& s : one.simplices) CHECK(s.grade == 0);
  CHECK(one.snapshot(0) == multineighbor_complex(proximity_graph(tet, 1.5), 1, 3));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PointCloud x = random_cloud(9, 300 + seed);
    FilteredComplex f = multinbr_filtration_m(x, 1.5, 4, 3);
    check_monotone(f);
    Graph pg = proximity_graph(x, 1.5);
    for (std::size_t m = 1; m <= 4; ++m)
      CHECK(f.snapshot(static_cast<double>(4 - m)) == multineighbor_complex(pg, m, 3));
  }
  CHECK_THROWS_AS(multinbr_filtration_m(tet, 0, 3, 3), ParameterError);
  CHECK_THROWS_AS(multinbr_filtration_m(tet, 1, 0, 3), ParameterError);
}

TEST_CASE("rips_filtration") {
  PointCloud two{{{0, 0, 0}, {2, 0, 0}}};
  auto g2 = grades(rips_filtration(two, 3));
  CHECK(g2 == std::map<Simplex, double>{{{0}, 0}, {{1}, 0}, {{0, 1}, 2}});
  PointCloud tri{{{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0}}};
  auto gt = grades(rips_filtration(tri, 3));
  CHECK(gt[{0, 1, 2}] == doctest::Approx(1.0));
  CHECK(gt[{0, 2}] == doctest::Approx(1.0));
  auto gc = grades(rips_filtration(collinear(), 3));
  CHECK(gc[{0, 1}] == 1);
  CHECK(gc[{1, 2}] == 1);
  CHECK(gc[{0, 2}] == 2);
  CHECK(gc[{0, 1, 2}] == 2);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointCloud x = random_cloud(9, 400 + seed);
    FilteredComplex f = rips_filtration(x, 3);
    check_monotone(f);
    PointCloud rev{{x.points.rbegin(), x.points.rend()}};
    auto gr = grades(rips_filtration(rev, 3));
    for (const auto& s : f.simplices) {
      Simplex t;
      for (Vertex v : s.vertices) t.push_back(static_cast<Vertex>(8 - v));
      std::sort(t.begin(), t.end());
      CHECK(gr[t] == s.grade);
    }
  }
}

TEST_CASE("cloud csv") {
  PointCloud x = random_cloud(5, 8);
  std::stringstream ss;
  write_cloud_csv(ss, x);
  CHECK(read_cloud_csv(ss) == x);
  std::istringstream empty("x,y,z\n");
  CHECK(read_cloud_csv(empty).size() == 0);
  std::istringstream bad("x,y,z\n1,2\n");
  CHECK_THROWS_AS(read_cloud_csv(bad), FormatError);
  std::istringstream nan("x,y,z\n1,nan,2\n");
  CHECK_THROWS_AS(read_cloud_csv(nan), FormatError);
  CHECK(diameter(collinear()) == 2);
  CHECK(diameter(PointCloud{}) == 0);
}
