/* Copyright 2026 The multinbr Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libmultinbr. Objects are opaque handles released with the
 * matching *_free function. Every fallible call returns an mn_status; on
 * failure mn_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Output handles are only written on
 * success.
 */
#ifndef MULTINBR_MULTINBR_H_
#define MULTINBR_MULTINBR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MN_API __declspec(dllexport)
#else
#define MN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mn_status {
  MN_OK = 0,
  MN_ERR_PARAMETER = 2,
  MN_ERR_CAPACITY = 3,
  MN_ERR_FORMAT = 4,
  MN_ERR_STRUCTURAL = 5,
  MN_ERR_IO = 6,
  MN_ERR_INTERNAL = 9
} mn_status;

typedef struct mn_graph mn_graph;
typedef struct mn_complex mn_complex;
typedef struct mn_cloud mn_cloud;
typedef struct mn_diagram mn_diagram;

MN_API const char* mn_version(void);
MN_API const char* mn_last_error(void);
/* "ok", "parameter", "capacity", "format", "structural", "io", "internal". */
MN_API const char* mn_status_name(mn_status s);

/* Graphs: text format "n <count>" then "u v" lines with u < v. */
MN_API mn_status mn_graph_read(const char* path, mn_graph** out);
MN_API mn_status mn_graph_write(const mn_graph* g, const char* path);
MN_API mn_status mn_graph_erdos_renyi(size_t n, double p, uint64_t seed, mn_graph** out);
MN_API mn_status mn_graph_complete(size_t n, mn_graph** out);
MN_API size_t mn_graph_vertex_count(const mn_graph* g);
MN_API size_t mn_graph_edge_count(const mn_graph* g);
MN_API void mn_graph_free(mn_graph* g);

/* Complexes: one maximal face per line, vertex ids ascending. */
MN_API mn_status mn_complex_build(const mn_graph* g, size_t m, int max_dim, mn_complex** out);
MN_API mn_status mn_complex_read(const char* path, mn_complex** out);
MN_API mn_status mn_complex_write(const mn_complex* k, const char* path);
/* -1 for the empty complex. */
MN_API int mn_complex_dimension(const mn_complex* k);
/* counts[d] = number of d-simplices for d < cap; *len = dimension + 1. */
MN_API mn_status mn_complex_face_counts(const mn_complex* k, size_t* counts, size_t cap,
                                        size_t* len);
/* Reduced GF(2) Betti numbers of degrees 0..max_degree into out[0..max_degree]. */
MN_API mn_status mn_complex_betti(const mn_complex* k, int max_degree, size_t* out);
MN_API void mn_complex_free(mn_complex* k);

/* Point clouds: CSV with header "x,y,z". */
MN_API mn_status mn_cloud_read(const char* path, mn_cloud** out);
MN_API size_t mn_cloud_size(const mn_cloud* x);
MN_API void mn_cloud_free(mn_cloud* x);

typedef enum mn_filtration {
  MN_FILTRATION_MULTINBR_R = 0, /* r varies, m fixed */
  MN_FILTRATION_MULTINBR_M = 1, /* m varies at fixed radius */
  MN_FILTRATION_RIPS = 2
} mn_filtration;

typedef struct mn_persistence_options {
  mn_filtration method;
  size_t m;          /* MULTINBR_R: m; MULTINBR_M: m_max */
  int max_dim;       /* simplex dimension cap */
  int max_degree;    /* homology degrees 0..max_degree */
  double r_max;      /* grade cap for R and RIPS; <= 0 means the diameter */
  double radius;     /* proximity radius for MULTINBR_M */
} mn_persistence_options;

MN_API void mn_persistence_options_init(mn_persistence_options* opts);
MN_API mn_status mn_persistence(const mn_cloud* x, const mn_persistence_options* opts,
                                mn_diagram** out);

/* Diagrams: CSV with header "dim,birth,death"; infinite deaths as "inf". */
MN_API mn_status mn_diagram_read(const char* path, mn_diagram** out);
MN_API mn_status mn_diagram_write(const mn_diagram* d, const char* path);
MN_API size_t mn_diagram_size(const mn_diagram* d);
MN_API void mn_diagram_free(mn_diagram* d);

typedef enum mn_infinite_bars { MN_INF_DROP = 0, MN_INF_CAP = 1 } mn_infinite_bars;

/* Persistence entropies E_0, E_1, E_2 into out[0..2]. */
MN_API mn_status mn_diagram_entropy(const mn_diagram* d, mn_infinite_bars policy, double cap,
                                    double* out);
/* Appends-free writer for feature CSV "label,e0,e1,e2" with rows[3 * i + q]. */
MN_API mn_status mn_feature_csv_write(const char* path, const char* const* labels,
                                      const double* rows, size_t count);

MN_API mn_status mn_connectivity_bound(size_t n, double p, size_t m, size_t i, double* out);
MN_API mn_status mn_neighborly_union_bound(size_t n, double p, size_t m, size_t i,
                                           double* out);

typedef enum mn_noise { MN_NOISE_UNIFORM = 0, MN_NOISE_GAUSSIAN = 1 } mn_noise;

typedef struct mn_dataset_options {
  size_t points;
  size_t clouds_per_shape;
  double magnitude;
  mn_noise noise;
  uint64_t seed;
} mn_dataset_options;

MN_API void mn_dataset_options_init(mn_dataset_options* opts);
MN_API mn_status mn_dataset_write(const mn_dataset_options* opts, const char* dir);

typedef struct mn_classify_options {
  const char* methods;   /* e.g. "m1,m2,m3,m4,m5,rips" */
  size_t repetitions;
  double train_fraction;
  int max_dim;
  int max_degree;
  mn_infinite_bars inf_bars;
  double inf_cap;
  size_t trees;
  int max_depth;
  int shuffle_labels;
  unsigned jobs;
} mn_classify_options;

MN_API void mn_classify_options_init(mn_classify_options* opts);
/* dataset_dir as written by mn_dataset_write; writes the results table CSV. */
MN_API mn_status mn_classify(const char* dataset_dir, const mn_classify_options* opts,
                             const char* results_path);
/* Same, generating the dataset in memory. */
MN_API mn_status mn_classify_generated(const mn_dataset_options* data,
                                       const mn_classify_options* opts,
                                       const char* results_path);

typedef enum mn_sweep_kind {
  MN_SWEEP_VANISHING = 0,
  MN_SWEEP_WINDOW = 1,
  MN_SWEEP_THRESHOLD = 2,
  MN_SWEEP_NEIGHBORLY = 3
} mn_sweep_kind;

typedef struct mn_sweep_options {
  mn_sweep_kind kind;
  const size_t* n_grid;
  size_t n_count;
  /* VANISHING: p_power = 0 uses p = p_value, otherwise p = n^p_value. */
  int p_power;
  double p_value;
  size_t m;
  const int* degrees;
  size_t degree_count;
  double eps;
  /* THRESHOLD */
  size_t k;
  const double* alpha_grid;
  size_t alpha_count;
  /* NEIGHBORLY: grids over p, m and i. */
  const double* p_grid;
  size_t p_count;
  const size_t* m_grid;
  size_t m_count;
  const size_t* i_grid;
  size_t i_count;
  size_t trials;
  uint64_t seed;
  unsigned jobs;
} mn_sweep_options;

MN_API void mn_sweep_options_init(mn_sweep_options* opts);
MN_API mn_status mn_sweep(const mn_sweep_options* opts, const char* report_path);

#ifdef __cplusplus
}
#endif

#endif /* MULTINBR_MULTINBR_H_ */
