// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "multinbr/error.hpp"
#include "multinbr/random.hpp"

namespace multinbr {

namespace fs = std::filesystem;
using std::numbers::pi;

std::string_view shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kCircle: return "circle";
    case ShapeKind::kSphere: return "sphere";
    case ShapeKind::kDoubleSphere: return "double_sphere";
    case ShapeKind::kTorus: return "torus";
    case ShapeKind::kPretzelA: return "pretzel_a";
    case ShapeKind::kPretzelB: return "pretzel_b";
  }
  return "unknown";
}

std::optional<ShapeKind> parse_shape(std::string_view name) {
  for (ShapeKind k : kAllShapes)
    if (shape_name(k) == name) return k;
  return std::nullopt;
}

std::string_view noise_name(NoiseLaw law) {
  return law == NoiseLaw::kUniform ? "uniform" : "gauss";
}

std::optional<NoiseLaw> parse_noise(std::string_view name) {
  if (name == "uniform") return NoiseLaw::kUniform;
  if (name == "gauss") return NoiseLaw::kGaussian;
  return std::nullopt;
}

ShapeSpec default_shape_spec(ShapeKind kind, std::size_t points) {
  switch (kind) {
    case ShapeKind::kCircle: return {kind, {2.5, 0.0}, points};
    case ShapeKind::kSphere: return {kind, {2.5, 0.0}, points};
    case ShapeKind::kDoubleSphere: return {kind, {2.0, 1.0}, points};
    case ShapeKind::kTorus: return {kind, {2.0, 0.8}, points};
    case ShapeKind::kPretzelA: return {kind, {2.5, 0.4}, points};
    case ShapeKind::kPretzelB: return {kind, {1.2, 0.5}, points};
  }
  throw ParameterError("unknown shape kind");
}

namespace {

struct Grid {
  std::size_t rows;
  std::size_t cols;
};

Grid grid_for(std::size_t points) {
  std::size_t rows = 1;
  for (std::size_t r = 1; r * r <= points; ++r)
    if (points % r == 0) rows = r;
  return {rows, points / rows};
}

Point3 sphere_point(const Point3& center, double radius, double polar,
                    double azimuth, double axis_sign) {
  return {center[0] + axis_sign * radius * std::cos(polar),
          center[1] + radius * std::sin(polar) * std::cos(azimuth),
          center[2] + radius * std::sin(polar) * std::sin(azimuth)};
}

}  // namespace

PointCloud sample_shape(const ShapeSpec& spec) {
  if (spec.points < 4) throw ParameterError("shape resolution must be >= 4");
  const auto [r0, r1] = spec.radii;
  if (!(r0 > 0.0)) throw ParameterError("shape radii must be > 0");
  if (spec.kind != ShapeKind::kCircle && spec.kind != ShapeKind::kSphere &&
      !(r1 > 0.0))
    throw ParameterError("shape radii must be > 0");

  PointCloud x;
  x.points.reserve(spec.points);
  const Grid g = grid_for(spec.points);
  switch (spec.kind) {
    case ShapeKind::kCircle:
      for (std::size_t i = 0; i < spec.points; ++i) {
        const double t = 2.0 * pi * static_cast<double>(i) / static_cast<double>(spec.points);
        x.points.push_back({r0 * std::cos(t), r0 * std::sin(t), 0.0});
      }
      break;
    case ShapeKind::kSphere:
      for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) {
          const double polar = pi * (static_cast<double>(i) + 0.5) / static_cast<double>(g.rows);
          const double az = 2.0 * pi * static_cast<double>(j) / static_cast<double>(g.cols);
          x.points.push_back(sphere_point({0, 0, 0}, r0, polar, az, 1.0));
        }
      break;
    case ShapeKind::kDoubleSphere: {
      // Rows split in proportion to the radii; the big sphere sits at
      // (-r0,0,0), the small one at (r1,0,0), touching at the origin.
      std::size_t big_rows = static_cast<std::size_t>(
          std::lround(static_cast<double>(g.rows) * r0 / (r0 + r1)));
      if (g.rows >= 2) big_rows = std::clamp<std::size_t>(big_rows, 1, g.rows - 1);
      const std::size_t small_rows = g.rows - big_rows;
      for (std::size_t i = 0; i < g.rows; ++i) {
        const bool big = i < big_rows;
        const std::size_t local = big ? i : i - big_rows;
        const std::size_t count = big ? big_rows : small_rows;
        const double polar = pi * (static_cast<double>(local) + 0.5) / static_cast<double>(count);
        for (std::size_t j = 0; j < g.cols; ++j) {
          const double az = 2.0 * pi * static_cast<double>(j) / static_cast<double>(g.cols);
          x.points.push_back(big ? sphere_point({-r0, 0, 0}, r0, polar, az, 1.0)
                                 : sphere_point({r1, 0, 0}, r1, polar, az, -1.0));
        }
      }
      break;
    }
    case ShapeKind::kTorus:
      for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) {
          const double u = 2.0 * pi * static_cast<double>(i) / static_cast<double>(g.rows);
          const double v = 2.0 * pi * static_cast<double>(j) / static_cast<double>(g.cols);
          const double ring = r0 + r1 * std::cos(v);
          x.points.push_back({ring * std::cos(u), ring * std::sin(u), r1 * std::sin(v)});
        }
      break;
    case ShapeKind::kPretzelA: {
      // Tube around the figure-eight c(u) = (a cos u, 0.6 a sin 2u, 0).
      const double a = r0, b = 0.6 * r0;
      for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) {
          const double u = 2.0 * pi * (static_cast<double>(i) + 0.25) / static_cast<double>(g.rows);
          const double v = 2.0 * pi * static_cast<double>(j) / static_cast<double>(g.cols);
          const double tx = -a * std::sin(u), ty = 2.0 * b * std::cos(2.0 * u);
          const double norm = std::hypot(tx, ty);
          const double nx = -ty / norm, ny = tx / norm;
          x.points.push_back({a * std::cos(u) + r1 * std::cos(v) * nx,
                              b * std::sin(2.0 * u) + r1 * std::cos(v) * ny,
                              r1 * std::sin(v)});
        }
      break;
    }
    case ShapeKind::kPretzelB: {
      // Two tori side by side, overlapping near x = 0 where the junction
      // band is flattened in z.
      const double offset = 1.25;
      for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) {
          const bool left = 2 * i < g.rows;
          const std::size_t half = left ? (g.rows + 1) / 2 : g.rows / 2;
          const std::size_t local = left ? i : i - (g.rows + 1) / 2;
          const double u = 2.0 * pi * static_cast<double>(local) / static_cast<double>(half);
          const double v = 2.0 * pi * static_cast<double>(j) / static_cast<double>(g.cols);
          const double ring = r0 + r1 * std::cos(v);
          Point3 p{(left ? -offset : offset) + ring * std::cos(u), ring * std::sin(u),
                   r1 * std::sin(v)};
          if (std::abs(p[0]) < 0.45) p[2] *= 0.5;
          x.points.push_back(p);
        }
      break;
    }
  }
  return x;
}

PointCloud add_noise(const PointCloud& x, double magnitude, std::uint64_t seed,
                     NoiseLaw law) {
  if (!(magnitude >= 0.0)) throw ParameterError("noise magnitude must be >= 0");
  Rng rng(seed);
  PointCloud out = x;
  const double sigma = magnitude / std::sqrt(12.0);
  for (auto& p : out.points)
    for (double& c : p)
      c += law == NoiseLaw::kUniform ? rng.uniform(-0.5 * magnitude, 0.5 * magnitude)
                                     : sigma * rng.normal();
  return out;
}

LabeledDataset build_dataset(const DatasetConfig& config) {
  LabeledDataset ds{config, {}};
  ds.clouds.reserve(config.cloud_count());
  std::uint64_t index = 0;
  for (ShapeKind kind : kAllShapes) {
    const PointCloud clean = sample_shape(default_shape_spec(kind, config.points_per_cloud));
    for (std::size_t c = 0; c < config.clouds_per_shape; ++c, ++index) {
      const std::uint64_t seed = config.seed + index;
      ds.clouds.push_back({add_noise(clean, config.magnitude, seed, config.noise), kind, seed});
    }
  }
  return ds;
}

namespace {

nlohmann::json config_to_json(const DatasetConfig& c) {
  return {{"points_per_cloud", c.points_per_cloud},
          {"clouds_per_shape", c.clouds_per_shape},
          {"magnitude", c.magnitude},
          {"noise", std::string(noise_name(c.noise))},
          {"seed", c.seed}};
}

}  // namespace

void write_dataset(const std::string& dir, const LabeledDataset& ds) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create dataset directory: " + dir);
  std::ofstream manifest(fs::path(dir) / "manifest.csv");
  if (!manifest) throw IoError("cannot write manifest in " + dir);
  manifest << "path,label,seed\n";
  std::vector<std::size_t> per_label(kAllShapes.size(), 0);
  for (const auto& c : ds.clouds) {
    const std::string label(shape_name(c.label));
    fs::create_directories(fs::path(dir) / label, ec);
    const std::string rel =
        label + "/" + std::to_string(per_label[static_cast<std::size_t>(c.label)]++) + ".csv";
    write_cloud_csv_file((fs::path(dir) / rel).string(), c.cloud);
    manifest << rel << ',' << label << ',' << c.seed << '\n';
  }
  std::ofstream meta(fs::path(dir) / "dataset.json");
  if (!meta) throw IoError("cannot write dataset.json in " + dir);
  meta << config_to_json(ds.config).dump(2) << '\n';
}

LabeledDataset read_dataset(const std::string& dir) {
  LabeledDataset ds;
  std::ifstream meta(fs::path(dir) / "dataset.json");
  if (!meta) throw IoError("missing dataset.json in " + dir);
  try {
    const auto j = nlohmann::json::parse(meta);
    ds.config.points_per_cloud = j.at("points_per_cloud").get<std::size_t>();
    ds.config.clouds_per_shape = j.at("clouds_per_shape").get<std::size_t>();
    ds.config.magnitude = j.at("magnitude").get<double>();
    const auto law = parse_noise(j.at("noise").get<std::string>());
    if (!law) throw FormatError("unknown noise law in dataset.json");
    ds.config.noise = *law;
    ds.config.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("dataset.json: ") + e.what());
  }

  std::ifstream manifest(fs::path(dir) / "manifest.csv");
  if (!manifest) throw IoError("missing manifest.csv in " + dir);
  std::string line;
  if (!std::getline(manifest, line) || line != "path,label,seed")
    throw FormatError("manifest.csv must start with header 'path,label,seed'");
  while (std::getline(manifest, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string path, label, seed;
    if (!std::getline(row, path, ',') || !std::getline(row, label, ',') ||
        !std::getline(row, seed))
      throw FormatError("manifest row needs path,label,seed: " + line);
    const auto kind = parse_shape(label);
    if (!kind) throw FormatError("unknown label in manifest: " + label);
    LabeledCloud c;
    c.cloud = read_cloud_csv_file((fs::path(dir) / path).string());
    c.label = *kind;
    try {
      c.seed = std::stoull(seed);
    } catch (const std::exception&) {
      throw FormatError("bad seed in manifest: " + seed);
    }
    ds.clouds.push_back(std::move(c));
  }
  return ds;
}

}  // namespace multinbr
