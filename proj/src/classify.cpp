// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "multinbr/error.hpp"
#include "multinbr/homology.hpp"
#include "multinbr/random.hpp"
#include "parallel.hpp"

namespace multinbr {

namespace {

int argmax_smallest(const std::vector<std::uint32_t>& counts) {
  int best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c)
    if (counts[c] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
  return best;
}

class TreeBuilder {
 public:
  TreeBuilder(std::span<const FeatureRow> rows, int classes,
              const ForestParams& params, Rng& rng)
      : rows_(rows), classes_(classes), params_(params), rng_(rng) {}

  DecisionTree build(std::vector<std::uint32_t> sample) {
    DecisionTree t;
    grow(t, sample, 0);
    return t;
  }

 private:
  std::uint32_t grow(DecisionTree& t, std::vector<std::uint32_t>& sample, int depth) {
    const auto id = static_cast<std::uint32_t>(t.nodes.size());
    t.nodes.emplace_back();
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(classes_), 0);
    for (auto i : sample) ++counts[static_cast<std::size_t>(rows_[i].label)];
    const double n = static_cast<double>(sample.size());
    double parent = n;
    for (auto c : counts) parent -= static_cast<double>(c) * c / n;

    auto make_leaf = [&] {
      t.nodes[id].majority = argmax_smallest(counts);
      t.nodes[id].counts = std::move(counts);
      return id;
    };
    if (depth >= params_.max_depth || sample.size() < 2 || parent <= 1e-12) return make_leaf();

    std::array<int, 3> order{0, 1, 2};
    const std::size_t tried = std::min<std::size_t>(params_.features_per_split, 3);
    for (std::size_t k = 0; k < tried; ++k)
      std::swap(order[k], order[k + rng_.below(3 - k)]);

    int best_feature = -1;
    double best_threshold = 0.0, best_score = parent - 1e-12;
    std::vector<std::uint32_t> left(counts.size());
    for (std::size_t k = 0; k < tried; ++k) {
      const int f = order[k];
      std::sort(sample.begin(), sample.end(), [&](auto a, auto b) {
        return rows_[a].features[f] < rows_[b].features[f];
      });
      std::fill(left.begin(), left.end(), 0);
      double left_sq = 0.0, right_sq = 0.0;
      for (auto c : counts) right_sq += static_cast<double>(c) * c;
      for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
        const auto c = static_cast<std::size_t>(rows_[sample[i]].label);
        const double l = left[c], r = counts[c] - left[c];
        left_sq += 2 * l + 1;
        right_sq -= 2 * r - 1;
        ++left[c];
        const double a = rows_[sample[i]].features[f], b = rows_[sample[i + 1]].features[f];
        if (!(a < b)) continue;
        const double nl = static_cast<double>(i + 1), nr = n - nl;
        const double score = (nl - left_sq / nl) + (nr - right_sq / nr);
        if (score < best_score) {
          best_score = score;
          best_feature = f;
          best_threshold = 0.5 * (a + b);
        }
      }
    }
    if (best_feature < 0) return make_leaf();

    std::vector<std::uint32_t> lo, hi;
    for (auto i : sample)
      (rows_[i].features[best_feature] <= best_threshold ? lo : hi).push_back(i);
    sample.clear();
    sample.shrink_to_fit();
    const auto l = grow(t, lo, depth + 1);
    const auto r = grow(t, hi, depth + 1);
    auto& node = t.nodes[id];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  std::span<const FeatureRow> rows_;
  int classes_;
  const ForestParams& params_;
  Rng& rng_;
};

}  // namespace

int DecisionTree::predict(const std::array<double, 3>& x) const {
  std::uint32_t i = 0;
  while (nodes[i].feature >= 0)
    i = x[static_cast<std::size_t>(nodes[i].feature)] <= nodes[i].threshold ? nodes[i].left
                                                                              : nodes[i].right;
  return nodes[i].majority;
}

int ForestModel::predict(const std::array<double, 3>& x) const {
  if (constant) return constant_label;
  std::vector<std::uint32_t> votes(static_cast<std::size_t>(class_count), 0);
  for (const auto& t : trees) ++votes[static_cast<std::size_t>(t.predict(x))];
  return argmax_smallest(votes);
}

ForestModel train_forest(std::span<const FeatureRow> rows, const ForestParams& params,
                         std::uint64_t seed) {
  if (rows.size() < 4) throw ParameterError("train_forest needs at least 4 rows");
  if (params.trees == 0 || params.max_depth < 0 || params.features_per_split == 0)
    throw ParameterError("invalid forest parameters");
  ForestModel model;
  model.params = params;
  model.seed = seed;
  int lo = rows[0].label, hi = rows[0].label;
  for (const auto& r : rows) {
    if (r.label < 0) throw ParameterError("class labels must be >= 0");
    for (double v : r.features)
      if (!std::isfinite(v)) throw ParameterError("features must be finite");
    lo = std::min(lo, r.label);
    hi = std::max(hi, r.label);
  }
  model.class_count = hi + 1;
  if (lo == hi) {
    model.constant = true;
    model.constant_label = lo;
    return model;
  }
  Rng rng(seed);
  TreeBuilder builder(rows, model.class_count, params, rng);
  model.trees.reserve(params.trees);
  for (std::size_t t = 0; t < params.trees; ++t) {
    std::vector<std::uint32_t> sample(rows.size());
    for (auto& s : sample) s = static_cast<std::uint32_t>(rng.below(rows.size()));
    model.trees.push_back(builder.build(std::move(sample)));
  }
  return model;
}

double accuracy(const ForestModel& model, std::span<const FeatureRow> rows) {
  if (rows.empty()) throw ParameterError("accuracy of an empty row set");
  std::size_t hit = 0;
  for (const auto& r : rows) hit += model.predict(r.features) == r.label;
  return static_cast<double>(hit) / static_cast<double>(rows.size());
}

std::string Method::name() const {
  return kind == Kind::kRips ? "rips" : "multinbr_m" + std::to_string(m);
}

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  std::stringstream in(list);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "rips") {
      out.push_back({Method::Kind::kRips, 0});
      continue;
    }
    std::string digits = tok;
    if (digits.rfind("multinbr_m", 0) == 0) digits = digits.substr(10);
    else if (!digits.empty() && digits[0] == 'm') digits = digits.substr(1);
    std::size_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoul(digits, &used);
      if (used != digits.size()) m = 0;
    } catch (const std::exception&) {
      m = 0;
    }
    if (m == 0) throw ParameterError("unknown method: " + tok);
    out.push_back({Method::Kind::kMultinbr, m});
  }
  if (out.empty()) throw ParameterError("no methods given");
  return out;
}

CloudFeatures cloud_features(const PointCloud& x, std::span<const Method> methods,
                             const EvalConfig& config) {
  std::vector<std::size_t> ms;
  bool rips = false;
  for (const auto& m : methods) {
    if (m.kind == Method::Kind::kRips) rips = true;
    else ms.push_back(m.m);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  std::vector<FilteredComplex> filtrations;
  if (!ms.empty()) filtrations = multinbr_filtrations_r(x, ms, config.max_dim);
  FilteredComplex rips_f;
  if (rips) rips_f = rips_filtration(x, config.max_dim);

  CloudFeatures row;
  for (const auto& m : methods) {
    const FilteredComplex& f =
        m.kind == Method::Kind::kRips
            ? rips_f
            : filtrations[static_cast<std::size_t>(
                  std::lower_bound(ms.begin(), ms.end(), m.m) - ms.begin())];
    std::array<double, 3> v{};
    if (f.simplices.empty()) {
      row.values.push_back(v);
      row.valid.push_back(false);
      continue;
    }
    const auto e = feature_vector(persistence_cohomology(f, config.max_degree), config.entropy, 2);
    std::copy_n(e.values.begin(), 3, v.begin());
    row.values.push_back(v);
    row.valid.push_back(true);
  }
  return row;
}

namespace {

struct RepetitionOutcome {
  std::vector<double> accuracy;
  std::vector<std::size_t> dropped;
};

RepetitionOutcome run_repetition(const LabeledDataset& base, std::size_t rep,
                                 std::span<const Method> methods, const EvalConfig& config) {
  const std::uint64_t rep_seed =
      base.config.seed + static_cast<std::uint64_t>(rep) * base.config.cloud_count();
  LabeledDataset regenerated;
  const LabeledDataset* ds = &base;
  if (rep > 0) {
    DatasetConfig c = base.config;
    c.seed = rep_seed;
    regenerated = build_dataset(c);
    ds = &regenerated;
  }
  const std::size_t n = ds->clouds.size();

  std::vector<CloudFeatures> feats;
  feats.reserve(n);
  for (const auto& c : ds->clouds) feats.push_back(cloud_features(c.cloud, methods, config));

  // Stratified split, identical for every method.
  Rng split_rng(mix_seed(rep_seed, 1));
  std::vector<bool> train(n, false);
  for (ShapeKind k : kAllShapes) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (ds->clouds[i].label == k) idx.push_back(i);
    for (std::size_t i = idx.size(); i > 1; --i)
      std::swap(idx[i - 1], idx[split_rng.below(i)]);
    auto take = static_cast<std::size_t>(
        std::lround(config.train_fraction * static_cast<double>(idx.size())));
    if (idx.size() >= 2) take = std::clamp<std::size_t>(take, 1, idx.size() - 1);
    for (std::size_t i = 0; i < take && i < idx.size(); ++i) train[idx[i]] = true;
  }

  RepetitionOutcome out;
  for (std::size_t j = 0; j < methods.size(); ++j) {
    std::vector<FeatureRow> tr, te;
    std::size_t dropped = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!feats[i].valid[j]) {
        ++dropped;
        continue;
      }
      FeatureRow r{feats[i].values[j], shape_label(ds->clouds[i].label)};
      (train[i] ? tr : te).push_back(r);
    }
    if (config.shuffle_labels) {
      Rng perm(mix_seed(rep_seed, 3));
      for (std::size_t i = tr.size(); i > 1; --i)
        std::swap(tr[i - 1].label, tr[perm.below(i)].label);
    }
    double acc = 0.0;
    if (tr.size() >= 4 && !te.empty())
      acc = accuracy(train_forest(tr, config.forest, mix_seed(rep_seed, 2)), te);
    out.accuracy.push_back(acc);
    out.dropped.push_back(dropped);
  }
  return out;
}

}  // namespace

std::vector<MethodResult> evaluate_methods(const LabeledDataset& dataset,
                                           std::span<const Method> methods,
                                           const EvalConfig& config) {
  if (config.repetitions == 0) throw ParameterError("repetitions must be >= 1");
  if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0))
    throw ParameterError("train fraction must lie in (0, 1)");
  if (config.max_degree < 0 || config.max_degree > 2 || config.max_dim < config.max_degree + 1)
    throw ParameterError("need 0 <= max_degree <= 2 and max_dim > max_degree");
  for (const auto& m : methods)
    if (m.kind == Method::Kind::kMultinbr && m.m == 0)
      throw ParameterError("multineighbour method needs m >= 1");
  if (dataset.clouds.empty()) throw ParameterError("empty dataset");

  std::vector<RepetitionOutcome> reps(config.repetitions);
  detail::parallel_for(config.repetitions, config.jobs, [&](std::size_t r) {
    reps[r] = run_repetition(dataset, r, methods, config);
  });

  std::vector<MethodResult> results;
  for (std::size_t j = 0; j < methods.size(); ++j) {
    MethodResult res;
    res.method = methods[j];
    for (const auto& r : reps) {
      res.accuracies.push_back(r.accuracy[j]);
      res.dropped_rows += r.dropped[j];
    }
    const double k = static_cast<double>(res.accuracies.size());
    res.mean = std::accumulate(res.accuracies.begin(), res.accuracies.end(), 0.0) / k;
    double ss = 0.0;
    for (double a : res.accuracies) ss += (a - res.mean) * (a - res.mean);
    res.std_dev = res.accuracies.size() > 1 ? std::sqrt(ss / (k - 1)) : 0.0;
    results.push_back(std::move(res));
  }
  return results;
}

double evaluate_accuracy(const LabeledDataset& dataset, const Method& method,
                         const EvalConfig& config) {
  return evaluate_methods(dataset, std::span(&method, 1), config)[0].mean;
}

void write_results_csv(std::ostream& out, std::size_t points,
                       const std::vector<MethodResult>& results) {
  out << "points,method,mean_accuracy,std_accuracy,repetitions\n";
  char buf[96];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%zu,%s,%.17g,%.17g,%zu\n", points,
                  r.method.name().c_str(), r.mean, r.std_dev, r.accuracies.size());
    out << buf;
  }
}

void write_results_csv_file(const std::string& path, std::size_t points,
                            const std::vector<MethodResult>& results) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write results file: " + path);
  write_results_csv(out, points, results);
}

}  // namespace multinbr
