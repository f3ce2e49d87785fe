// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "multinbr/error.hpp"
#include "multinbr/homology.hpp"

namespace multinbr {

double distance(const Point3& a, const Point3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double diameter(const PointCloud& x) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      d = std::max(d, distance(x.points[i], x.points[j]));
  return d;
}

Graph proximity_graph(const PointCloud& x, double r) {
  if (!(r >= 0.0)) throw ParameterError("radius must be >= 0");
  GraphBuilder b(x.size());
  for (Vertex i = 0; i < x.size(); ++i)
    for (Vertex j = i + 1; j < x.size(); ++j)
      if (distance(x.points[i], x.points[j]) < r) b.add_edge(i, j);
  return std::move(b).build();
}

namespace {

std::vector<double> distance_matrix(const PointCloud& x) {
  const std::size_t n = x.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d[i * n + j] = d[j * n + i] = distance(x.points[i], x.points[j]);
  return d;
}

void check_max_dim(int max_dim) {
  if (max_dim < 0) throw ParameterError("max_dim must be >= 0");
}

}  // namespace

std::vector<FilteredComplex> multinbr_filtrations_r(
    const PointCloud& x, std::span<const std::size_t> ms, int max_dim,
    std::optional<double> r_max) {
  check_max_dim(max_dim);
  const std::size_t n = x.size();
  std::vector<FilteredComplex> out(ms.size());
  for (auto& f : out) f.universe = n;
  if (ms.empty()) return out;
  for (std::size_t m : ms)
    if (m < 1) throw ParameterError("neighbour count m must be >= 1");
  const std::size_t m_lo = *std::min_element(ms.begin(), ms.end());
  const std::size_t m_hi = *std::max_element(ms.begin(), ms.end());
  const std::vector<double> dist = distance_matrix(x);
  const double cap = r_max.value_or(diameter(x));

  // far[d][w] = max over the current simplex's vertices of d(v, w) at depth d.
  std::vector<std::vector<double>> far(static_cast<std::size_t>(max_dim) + 1,
                                       std::vector<double>(n));
  Simplex sigma;
  std::vector<double> smallest;  // ascending, at most m_hi entries
  smallest.reserve(m_hi + 1);

  auto visit = [&](auto&& self, std::size_t depth) -> void {
    const std::vector<double>& f = far[depth];
    if (n - sigma.size() < m_lo) return;
    smallest.clear();
    for (Vertex w = 0; w < n; ++w) {
      if (std::binary_search(sigma.begin(), sigma.end(), w)) continue;
      const double v = f[w];
      if (smallest.size() == m_hi && v >= smallest.back()) continue;
      auto pos = std::upper_bound(smallest.begin(), smallest.end(), v);
      smallest.insert(pos, v);
      if (smallest.size() > m_hi) smallest.pop_back();
    }
    // Grades only grow along cofaces, so stop once even the loosest m fails.
    if (smallest.size() < m_lo || smallest[m_lo - 1] > cap) return;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (smallest.size() < ms[k]) continue;
      const double grade = smallest[ms[k] - 1];
      if (grade <= cap) out[k].simplices.push_back({sigma, grade});
    }
    if (depth == static_cast<std::size_t>(max_dim)) return;
    for (Vertex v = sigma.back() + 1; v < n; ++v) {
      std::vector<double>& next = far[depth + 1];
      const double* row = &dist[std::size_t{v} * n];
      for (std::size_t w = 0; w < n; ++w) next[w] = std::max(f[w], row[w]);
      sigma.push_back(v);
      self(self, depth + 1);
      sigma.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    const double* row = &dist[std::size_t{v} * n];
    std::copy(row, row + n, far[0].begin());
    sigma = {v};
    visit(visit, 0);
  }
  for (auto& f : out) f.sort();
  return out;
}

FilteredComplex multinbr_filtration_r(const PointCloud& x, std::size_t m,
                                      int max_dim, std::optional<double> r_max) {
  const std::size_t ms[] = {m};
  return std::move(multinbr_filtrations_r(x, ms, max_dim, r_max).front());
}

FilteredComplex multinbr_filtration_m(const PointCloud& x, double r,
                                      std::size_t m_max, int max_dim) {
  if (!(r > 0.0)) throw ParameterError("radius must be > 0");
  if (m_max < 1) throw ParameterError("m_max must be >= 1");
  const Graph g = proximity_graph(x, r);
  const SimplicialComplex n1 = multineighbor_complex(g, 1, max_dim);
  FilteredComplex f;
  f.universe = x.size();
  for (int d = 0; d <= n1.dimension(); ++d)
    for (const auto& s : n1.simplices(d)) {
      const std::size_t c = common_neighbors_bits(g, s).count();
      f.simplices.push_back(
          {s, static_cast<double>(m_max - std::min(c, m_max))});
    }
  f.sort();
  return f;
}

FilteredComplex rips_filtration(const PointCloud& x, int max_dim,
                                std::optional<double> r_max) {
  check_max_dim(max_dim);
  const std::size_t n = x.size();
  const std::vector<double> dist = distance_matrix(x);
  const double cap = r_max.value_or(diameter(x));
  FilteredComplex f;
  f.universe = n;
  Simplex sigma;
  auto visit = [&](auto&& self, double grade) -> void {
    f.simplices.push_back({sigma, grade});
    if (simplex_dim(sigma) == max_dim) return;
    for (Vertex v = sigma.back() + 1; v < n; ++v) {
      double g = grade;
      for (Vertex u : sigma) g = std::max(g, dist[std::size_t{u} * n + v]);
      if (g > cap) continue;
      sigma.push_back(v);
      self(self, g);
      sigma.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    sigma = {v};
    visit(visit, 0.0);
  }
  f.sort();
  return f;
}

PointCloud read_cloud_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x,y,z")
    throw FormatError("point-cloud CSV must start with header 'x,y,z'");
  PointCloud x;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string tok;
    Point3 p{};
    std::size_t k = 0;
    while (std::getline(row, tok, ',')) {
      if (k == 3) throw FormatError("cloud line " + std::to_string(line_no) + ": too many fields");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size() || !std::isfinite(v))
        throw FormatError("cloud line " + std::to_string(line_no) +
                          ": bad coordinate '" + tok + "'");
      p[k++] = v;
    }
    if (k != 3)
      throw FormatError("cloud line " + std::to_string(line_no) + ": expected 3 fields");
    x.points.push_back(p);
  }
  return x;
}

PointCloud read_cloud_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open point-cloud file: " + path);
  return read_cloud_csv(in);
}

void write_cloud_csv(std::ostream& out, const PointCloud& x) {
  out << "x,y,z\n";
  char buf[128];
  for (const auto& p : x.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p[0], p[1], p[2]);
    out << buf;
  }
}

void write_cloud_csv_file(const std::string& path, const PointCloud& x) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write point-cloud file: " + path);
  write_cloud_csv(out, x);
}

}  // namespace multinbr
