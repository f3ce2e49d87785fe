// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multinbr/filtration.hpp"

namespace multinbr {

enum class ShapeKind {
  kCircle,
  kSphere,
  kDoubleSphere,
  kTorus,
  kPretzelA,
  kPretzelB,
};

inline constexpr std::array<ShapeKind, 6> kAllShapes = {
    ShapeKind::kCircle,   ShapeKind::kSphere,   ShapeKind::kDoubleSphere,
    ShapeKind::kTorus,    ShapeKind::kPretzelA, ShapeKind::kPretzelB};

std::string_view shape_name(ShapeKind kind);
std::optional<ShapeKind> parse_shape(std::string_view name);
inline int shape_label(ShapeKind kind) { return static_cast<int>(kind); }

/// Shape plus its size parameters. Meaning of `radii` per kind:
///   circle, sphere:  {radius, unused}
///   double_sphere:   {big radius, small radius}, spheres tangent externally
///   torus:           {R, rho}
///   pretzel_a:       {figure-eight half-width, tube radius}
///   pretzel_b:       {R, rho} of each of the two joined tori
struct ShapeSpec {
  ShapeKind kind = ShapeKind::kCircle;
  std::array<double, 2> radii{};
  std::size_t points = 36;
};

/// Default sizing (every noiseless cloud has diameter <= 6).
ShapeSpec default_shape_spec(ShapeKind kind, std::size_t points);

/// Deterministic regular-grid sampling: `points` samples along the circle,
/// a rows x cols parameter grid (rows = largest divisor <= sqrt) otherwise.
PointCloud sample_shape(const ShapeSpec& spec);

enum class NoiseLaw {
  kUniform,   ///< U[-magnitude/2, magnitude/2] per coordinate
  kGaussian,  ///< N(0, magnitude^2 / 12), same variance as the uniform law
};

std::string_view noise_name(NoiseLaw law);
std::optional<NoiseLaw> parse_noise(std::string_view name);

/// Perturbs every coordinate independently; draws are point-major.
PointCloud add_noise(const PointCloud& x, double magnitude, std::uint64_t seed,
                     NoiseLaw law = NoiseLaw::kUniform);

struct LabeledCloud {
  PointCloud cloud;
  ShapeKind label = ShapeKind::kCircle;
  std::uint64_t seed = 0;
};

struct DatasetConfig {
  std::size_t points_per_cloud = 36;
  std::size_t clouds_per_shape = 8;
  double magnitude = 1.0;
  NoiseLaw noise = NoiseLaw::kUniform;
  std::uint64_t seed = 0;

  std::size_t cloud_count() const { return clouds_per_shape * kAllShapes.size(); }
};

struct LabeledDataset {
  DatasetConfig config;
  std::vector<LabeledCloud> clouds;
};

/// Shape-major list of noisy clouds; cloud i uses noise seed config.seed + i.
LabeledDataset build_dataset(const DatasetConfig& config);

/// Writes <dir>/<label>/<index>.csv, <dir>/manifest.csv (path,label,seed)
/// and <dir>/dataset.json (the generating config).
void write_dataset(const std::string& dir, const LabeledDataset& ds);
LabeledDataset read_dataset(const std::string& dir);

}  // namespace multinbr
