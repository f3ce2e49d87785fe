// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multinbr/complex.hpp"
#include "multinbr/filtered_complex.hpp"
#include "multinbr/graph.hpp"

namespace multinbr {

using Point3 = std::array<double, 3>;

struct PointCloud {
  std::vector<Point3> points;

  std::size_t size() const { return points.size(); }
  bool operator==(const PointCloud&) const = default;
};

double distance(const Point3& a, const Point3& b);
/// Largest pairwise distance (0 for fewer than two points).
double diameter(const PointCloud& x);

/// Vertices are the points; u ~ v iff d(u, v) < r.
Graph proximity_graph(const PointCloud& x, double r);

/// r-filtration of N_m for fixed m >= 1: a simplex sigma enters at the m-th
/// smallest value of max_{v in sigma} d(v, w) over points w outside sigma,
/// i.e. the closed-ball radius at which sigma gains m common neighbours.
/// Simplices above r_max (default: the diameter) or with fewer than m
/// outside points are omitted.
FilteredComplex multinbr_filtration_r(const PointCloud& x, std::size_t m,
                                      int max_dim = kDefaultMaxDim,
                                      std::optional<double> r_max = {});

/// multinbr_filtration_r for several m at once, sharing the enumeration.
std::vector<FilteredComplex> multinbr_filtrations_r(
    const PointCloud& x, std::span<const std::size_t> ms,
    int max_dim = kDefaultMaxDim, std::optional<double> r_max = {});

/// m-filtration at fixed radius r: N_{m_max} ⊆ ... ⊆ N_1 of the proximity
/// graph, re-indexed increasingly as grade = m_max - min(|Gamma(sigma)|, m_max).
FilteredComplex multinbr_filtration_m(const PointCloud& x, double r,
                                      std::size_t m_max,
                                      int max_dim = kDefaultMaxDim);

/// Vietoris-Rips: grade = largest pairwise distance in the simplex.
FilteredComplex rips_filtration(const PointCloud& x,
                                int max_dim = kDefaultMaxDim,
                                std::optional<double> r_max = {});

// CSV with header "x,y,z".
PointCloud read_cloud_csv(std::istream& in);
PointCloud read_cloud_csv_file(const std::string& path);
void write_cloud_csv(std::ostream& out, const PointCloud& x);
void write_cloud_csv_file(const std::string& path, const PointCloud& x);

}  // namespace multinbr
