// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/features.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "multinbr/error.hpp"

namespace multinbr {

double persistence_entropy(const PersistenceDiagram& d, int dim,
                           const EntropyOptions& opts) {
  std::vector<double> lengths;
  for (const auto& p : d.points) {
    if (p.dim != dim) continue;
    double death = p.death;
    if (p.infinite()) {
      if (opts.infinite_bars == InfiniteBars::kDrop) continue;
      death = opts.cap;
    }
    if (death > p.birth) lengths.push_back(death - p.birth);
  }
  if (lengths.size() < 2) return 0.0;
  double total = 0.0;
  for (double l : lengths) total += l;
  double e = 0.0;
  for (double l : lengths) {
    const double q = l / total;
    if (q > 0.0) e -= q * std::log(q);
  }
  return e;
}

EntropyVector feature_vector(const PersistenceDiagram& d,
                             const EntropyOptions& opts, int max_deg) {
  if (max_deg < 0) throw ParameterError("max_deg must be >= 0");
  EntropyVector v;
  for (int q = 0; q <= max_deg; ++q) v.values.push_back(persistence_entropy(d, q, opts));
  return v;
}

void write_feature_csv(std::ostream& out, const std::vector<FeatureRecord>& rows) {
  out << "label,e0,e1,e2\n";
  char buf[64];
  for (const auto& r : rows) {
    out << r.label;
    for (std::size_t q = 0; q < 3; ++q) {
      const double v = q < r.entropies.values.size() ? r.entropies.values[q] : 0.0;
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out << buf;
    }
    out << '\n';
  }
}

void write_feature_csv_file(const std::string& path,
                            const std::vector<FeatureRecord>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write feature file: " + path);
  write_feature_csv(out, rows);
}

std::vector<FeatureRecord> read_feature_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "label,e0,e1,e2")
    throw FormatError("feature CSV must start with header 'label,e0,e1,e2'");
  std::vector<FeatureRecord> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string tok;
    FeatureRecord r;
    if (!std::getline(row, r.label, ','))
      throw FormatError("feature line " + std::to_string(line_no) + ": missing label");
    while (std::getline(row, tok, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size())
        throw FormatError("feature line " + std::to_string(line_no) + ": bad value");
      r.entropies.values.push_back(v);
    }
    if (r.entropies.values.size() != 3)
      throw FormatError("feature line " + std::to_string(line_no) + ": expected 3 values");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace multinbr
