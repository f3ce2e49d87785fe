// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/multinbr.h"

#include <new>
#include <optional>
#include <string>
#include <vector>

#include "multinbr/classify.hpp"
#include "multinbr/complex.hpp"
#include "multinbr/error.hpp"
#include "multinbr/experiments.hpp"
#include "multinbr/features.hpp"
#include "multinbr/filtration.hpp"
#include "multinbr/graph.hpp"
#include "multinbr/homology.hpp"
#include "multinbr/shapes.hpp"

struct mn_graph {
  multinbr::Graph g;
};
struct mn_complex {
  multinbr::SimplicialComplex k;
};
struct mn_cloud {
  multinbr::PointCloud x;
};
struct mn_diagram {
  multinbr::PersistenceDiagram d;
};

namespace {

thread_local std::string last_error;

template <class F>
mn_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return MN_OK;
  } catch (const multinbr::Error& e) {
    last_error = e.what();
    return static_cast<mn_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MN_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MN_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw multinbr::ParameterError(std::string("null argument: ") + what);
}

multinbr::DatasetConfig to_config(const mn_dataset_options& o) {
  multinbr::DatasetConfig c;
  c.points_per_cloud = o.points;
  c.clouds_per_shape = o.clouds_per_shape;
  c.magnitude = o.magnitude;
  if (o.noise != MN_NOISE_UNIFORM && o.noise != MN_NOISE_GAUSSIAN)
    throw multinbr::ParameterError("unknown noise law");
  c.noise = o.noise == MN_NOISE_UNIFORM ? multinbr::NoiseLaw::kUniform
                                        : multinbr::NoiseLaw::kGaussian;
  c.seed = o.seed;
  return c;
}

multinbr::EvalConfig to_eval(const mn_classify_options& o) {
  multinbr::EvalConfig c;
  c.repetitions = o.repetitions;
  c.train_fraction = o.train_fraction;
  c.max_dim = o.max_dim;
  c.max_degree = o.max_degree;
  c.entropy.infinite_bars =
      o.inf_bars == MN_INF_CAP ? multinbr::InfiniteBars::kCap : multinbr::InfiniteBars::kDrop;
  c.entropy.cap = o.inf_cap;
  c.forest.trees = o.trees;
  c.forest.max_depth = o.max_depth;
  c.shuffle_labels = o.shuffle_labels != 0;
  c.jobs = o.jobs;
  return c;
}

void run_classify(const multinbr::LabeledDataset& ds, const mn_classify_options& o,
                  const char* path) {
  require(o.methods, "methods");
  const auto methods = multinbr::parse_methods(o.methods);
  multinbr::EvalConfig cfg = to_eval(o);
  cfg.dataset = ds.config;
  const auto results = multinbr::evaluate_methods(ds, methods, cfg);
  multinbr::write_results_csv_file(path, ds.config.points_per_cloud, results);
}

template <class T>
std::vector<T> span_of(const T* p, size_t n, const char* what) {
  if (n && !p) throw multinbr::ParameterError(std::string("null grid: ") + what);
  return n ? std::vector<T>(p, p + n) : std::vector<T>{};
}

}  // namespace

extern "C" {

const char* mn_version(void) { return "1.0.0"; }

const char* mn_last_error(void) { return last_error.c_str(); }

const char* mn_status_name(mn_status s) {
  return multinbr::error_code_name(static_cast<multinbr::ErrorCode>(s));
}

mn_status mn_graph_read(const char* path, mn_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new mn_graph{multinbr::read_graph_file(path)};
  });
}

mn_status mn_graph_write(const mn_graph* g, const char* path) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    multinbr::write_graph_file(path, g->g);
  });
}

mn_status mn_graph_erdos_renyi(size_t n, double p, uint64_t seed, mn_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mn_graph{multinbr::erdos_renyi(n, p, seed)};
  });
}

mn_status mn_graph_complete(size_t n, mn_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mn_graph{multinbr::complete_graph(n)};
  });
}

size_t mn_graph_vertex_count(const mn_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t mn_graph_edge_count(const mn_graph* g) { return g ? g->g.edge_count() : 0; }
void mn_graph_free(mn_graph* g) { delete g; }

mn_status mn_complex_build(const mn_graph* g, size_t m, int max_dim, mn_complex** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new mn_complex{multinbr::multineighbor_complex(g->g, m, max_dim)};
  });
}

mn_status mn_complex_read(const char* path, mn_complex** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new mn_complex{multinbr::read_complex_file(path)};
  });
}

mn_status mn_complex_write(const mn_complex* k, const char* path) {
  return guarded([&] {
    require(k, "complex");
    require(path, "path");
    multinbr::write_complex_file(path, k->k);
  });
}

int mn_complex_dimension(const mn_complex* k) { return k ? k->k.dimension() : -1; }

mn_status mn_complex_face_counts(const mn_complex* k, size_t* counts, size_t cap, size_t* len) {
  return guarded([&] {
    require(k, "complex");
    const auto f = k->k.face_counts();
    if (len) *len = f.size();
    if (cap) require(counts, "counts");
    for (size_t d = 0; d < f.size() && d < cap; ++d) counts[d] = f[d];
  });
}

mn_status mn_complex_betti(const mn_complex* k, int max_degree, size_t* out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    if (max_degree < 0) throw multinbr::ParameterError("max_degree must be >= 0");
    const auto b = multinbr::betti_numbers(k->k, max_degree);
    for (int q = 0; q <= max_degree; ++q) out[q] = b[static_cast<size_t>(q)];
  });
}

void mn_complex_free(mn_complex* k) { delete k; }

mn_status mn_cloud_read(const char* path, mn_cloud** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new mn_cloud{multinbr::read_cloud_csv_file(path)};
  });
}

size_t mn_cloud_size(const mn_cloud* x) { return x ? x->x.size() : 0; }
void mn_cloud_free(mn_cloud* x) { delete x; }

void mn_persistence_options_init(mn_persistence_options* o) {
  if (!o) return;
  o->method = MN_FILTRATION_MULTINBR_R;
  o->m = 1;
  o->max_dim = 3;
  o->max_degree = 2;
  o->r_max = 0.0;
  o->radius = 1.0;
}

mn_status mn_persistence(const mn_cloud* x, const mn_persistence_options* o, mn_diagram** out) {
  return guarded([&] {
    require(x, "cloud");
    require(o, "options");
    require(out, "out");
    if (o->max_degree < 0 || o->max_dim < o->max_degree + 1)
      throw multinbr::ParameterError("need max_degree >= 0 and max_dim > max_degree");
    const std::optional<double> r_max =
        o->r_max > 0.0 ? std::optional<double>(o->r_max) : std::nullopt;
    multinbr::FilteredComplex f;
    switch (o->method) {
      case MN_FILTRATION_MULTINBR_R:
        f = multinbr::multinbr_filtration_r(x->x, o->m, o->max_dim, r_max);
        break;
      case MN_FILTRATION_MULTINBR_M:
        f = multinbr::multinbr_filtration_m(x->x, o->radius, o->m, o->max_dim);
        break;
      case MN_FILTRATION_RIPS:
        f = multinbr::rips_filtration(x->x, o->max_dim, r_max);
        break;
      default:
        throw multinbr::ParameterError("unknown filtration method");
    }
    *out = new mn_diagram{multinbr::persistence_cohomology(f, o->max_degree)};
  });
}

mn_status mn_diagram_read(const char* path, mn_diagram** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new mn_diagram{multinbr::read_diagram_csv_file(path)};
  });
}

mn_status mn_diagram_write(const mn_diagram* d, const char* path) {
  return guarded([&] {
    require(d, "diagram");
    require(path, "path");
    multinbr::write_diagram_csv_file(path, d->d);
  });
}

size_t mn_diagram_size(const mn_diagram* d) { return d ? d->d.points.size() : 0; }
void mn_diagram_free(mn_diagram* d) { delete d; }

mn_status mn_diagram_entropy(const mn_diagram* d, mn_infinite_bars policy, double cap,
                             double* out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    if (policy != MN_INF_DROP && policy != MN_INF_CAP)
      throw multinbr::ParameterError("unknown infinite-bar policy");
    multinbr::EntropyOptions opts;
    opts.infinite_bars =
        policy == MN_INF_CAP ? multinbr::InfiniteBars::kCap : multinbr::InfiniteBars::kDrop;
    opts.cap = cap;
    const auto v = multinbr::feature_vector(d->d, opts, 2);
    for (int q = 0; q < 3; ++q) out[q] = v.values[static_cast<size_t>(q)];
  });
}

mn_status mn_feature_csv_write(const char* path, const char* const* labels, const double* rows,
                               size_t count) {
  return guarded([&] {
    require(path, "path");
    if (count) {
      require(labels, "labels");
      require(rows, "rows");
    }
    std::vector<multinbr::FeatureRecord> recs;
    for (size_t i = 0; i < count; ++i) {
      require(labels[i], "label");
      recs.push_back({labels[i], {{rows[3 * i], rows[3 * i + 1], rows[3 * i + 2]}}});
    }
    multinbr::write_feature_csv_file(path, recs);
  });
}

mn_status mn_connectivity_bound(size_t n, double p, size_t m, size_t i, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = multinbr::connectivity_bound(n, p, m, i);
  });
}

mn_status mn_neighborly_union_bound(size_t n, double p, size_t m, size_t i, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = multinbr::neighborly_union_bound(n, p, m, i);
  });
}

void mn_dataset_options_init(mn_dataset_options* o) {
  if (!o) return;
  const multinbr::DatasetConfig d;
  o->points = d.points_per_cloud;
  o->clouds_per_shape = d.clouds_per_shape;
  o->magnitude = d.magnitude;
  o->noise = MN_NOISE_UNIFORM;
  o->seed = 0;
}

mn_status mn_dataset_write(const mn_dataset_options* o, const char* dir) {
  return guarded([&] {
    require(o, "options");
    require(dir, "dir");
    multinbr::write_dataset(dir, multinbr::build_dataset(to_config(*o)));
  });
}

void mn_classify_options_init(mn_classify_options* o) {
  if (!o) return;
  const multinbr::EvalConfig c;
  o->methods = "m1,m2,m3,m4,m5,rips";
  o->repetitions = c.repetitions;
  o->train_fraction = c.train_fraction;
  o->max_dim = c.max_dim;
  o->max_degree = c.max_degree;
  o->inf_bars = MN_INF_DROP;
  o->inf_cap = 0.0;
  o->trees = c.forest.trees;
  o->max_depth = c.forest.max_depth;
  o->shuffle_labels = 0;
  o->jobs = 1;
}

mn_status mn_classify(const char* dataset_dir, const mn_classify_options* o,
                      const char* results_path) {
  return guarded([&] {
    require(dataset_dir, "dataset_dir");
    require(o, "options");
    require(results_path, "results_path");
    run_classify(multinbr::read_dataset(dataset_dir), *o, results_path);
  });
}

mn_status mn_classify_generated(const mn_dataset_options* data, const mn_classify_options* o,
                                const char* results_path) {
  return guarded([&] {
    require(data, "dataset options");
    require(o, "options");
    require(results_path, "results_path");
    run_classify(multinbr::build_dataset(to_config(*data)), *o, results_path);
  });
}

void mn_sweep_options_init(mn_sweep_options* o) {
  if (!o) return;
  *o = mn_sweep_options{};
  o->kind = MN_SWEEP_VANISHING;
  o->p_value = 0.5;
  o->m = 1;
  o->eps = 0.1;
  o->k = 2;
  o->trials = 100;
  o->jobs = 1;
}

mn_status mn_sweep(const mn_sweep_options* o, const char* report_path) {
  return guarded([&] {
    require(o, "options");
    require(report_path, "report_path");
    const auto ns = span_of(o->n_grid, o->n_count, "n");
    multinbr::SweepSummary s;
    switch (o->kind) {
      case MN_SWEEP_VANISHING: {
        const multinbr::PRule rule{o->p_power ? multinbr::PRule::Kind::kPower
                                              : multinbr::PRule::Kind::kConstant,
                                   o->p_value};
        s = multinbr::mc_vanishing_sweep(ns, rule, o->m,
                                         span_of(o->degrees, o->degree_count, "degrees"),
                                         o->trials, o->seed, o->eps, o->jobs);
        break;
      }
      case MN_SWEEP_WINDOW:
        s = multinbr::mc_nonvanishing_window(ns, o->m, o->eps, o->trials, o->seed, o->jobs);
        break;
      case MN_SWEEP_THRESHOLD:
        s = multinbr::subgraph_threshold_check(o->k, o->m,
                                               span_of(o->alpha_grid, o->alpha_count, "alpha"),
                                               ns, o->trials, o->seed, o->jobs);
        break;
      case MN_SWEEP_NEIGHBORLY:
        s = multinbr::neighborly_sweep(ns, span_of(o->p_grid, o->p_count, "p"),
                                       span_of(o->m_grid, o->m_count, "m"),
                                       span_of(o->i_grid, o->i_count, "i"), o->trials, o->seed,
                                       o->jobs);
        break;
      default:
        throw multinbr::ParameterError("unknown sweep kind");
    }
    multinbr::write_sweep_report_file(report_path, s);
  });
}

}  // extern "C"
