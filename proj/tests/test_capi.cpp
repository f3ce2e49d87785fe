// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library through its C header only.

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "multinbr/multinbr.h"

namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("multinbr_capi_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(mn_status_name(MN_OK)) == "ok");
  CHECK(std::string(mn_status_name(MN_ERR_PARAMETER)) == "parameter");
  CHECK(std::string(mn_status_name(MN_ERR_IO)) == "io");
  CHECK(std::strlen(mn_version()) > 0);
}

TEST_CASE("graphs, complexes and Betti numbers") {
  mn_graph* g = nullptr;
  REQUIRE(mn_graph_complete(4, &g) == MN_OK);
  CHECK(mn_graph_vertex_count(g) == 4);
  CHECK(mn_graph_edge_count(g) == 6);
  mn_complex* k = nullptr;
  REQUIRE(mn_complex_build(g, 1, 3, &k) == MN_OK);
  CHECK(mn_complex_dimension(k) == 2);
  size_t counts[4] = {}, len = 0;
  REQUIRE(mn_complex_face_counts(k, counts, 4, &len) == MN_OK);
  CHECK(len == 3);
  CHECK(counts[0] == 4);
  CHECK(counts[1] == 6);
  CHECK(counts[2] == 4);
  size_t betti[3] = {9, 9, 9};
  REQUIRE(mn_complex_betti(k, 2, betti) == MN_OK);
  CHECK(betti[0] == 0);
  CHECK(betti[1] == 0);
  CHECK(betti[2] == 1);

  auto dir = temp_dir("graph");
  const std::string gpath = (dir / "k4.txt").string(), cpath = (dir / "k4.cx").string();
  REQUIRE(mn_graph_write(g, gpath.c_str()) == MN_OK);
  CHECK(slurp(gpath) == "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  REQUIRE(mn_complex_write(k, cpath.c_str()) == MN_OK);
  mn_complex* back = nullptr;
  REQUIRE(mn_complex_read(cpath.c_str(), &back) == MN_OK);
  CHECK(mn_complex_dimension(back) == 2);
  mn_complex_free(back);
  mn_complex_free(k);
  mn_graph_free(g);

  mn_graph* er = nullptr;
  REQUIRE(mn_graph_erdos_renyi(10, 1.0, 3, &er) == MN_OK);
  CHECK(mn_graph_edge_count(er) == 45);
  mn_graph_free(er);
}

TEST_CASE("errors map to status codes") {
  mn_graph* g = nullptr;
  CHECK(mn_graph_erdos_renyi(5, 1.5, 1, &g) == MN_ERR_PARAMETER);
  CHECK(g == nullptr);
  CHECK(std::strlen(mn_last_error()) > 0);
  CHECK(mn_graph_read("/nonexistent/g.txt", &g) == MN_ERR_IO);
  auto dir = temp_dir("errors");
  write_text(dir / "bad.txt", "n 3\n0 0\n");
  CHECK(mn_graph_read((dir / "bad.txt").string().c_str(), &g) == MN_ERR_FORMAT);
  CHECK(g == nullptr);
  CHECK(mn_graph_complete(3, nullptr) == MN_ERR_PARAMETER);

  double v = 0;
  CHECK(mn_connectivity_bound(10, 0.5, 1, 0, &v) == MN_ERR_PARAMETER);
  REQUIRE(mn_connectivity_bound(10, 0.5, 1, 1, &v) == MN_OK);
  CHECK(v == 0.01953125);
  REQUIRE(mn_neighborly_union_bound(10, 0.5, 1, 1, &v) == MN_OK);
  CHECK(v == doctest::Approx(0.01953125));

  write_text(dir / "unsorted.csv", "dim,birth,death\n0,x,1\n");
  mn_diagram* d = nullptr;
  CHECK(mn_diagram_read((dir / "unsorted.csv").string().c_str(), &d) == MN_ERR_FORMAT);

  mn_sweep_options so;
  mn_sweep_options_init(&so);
  size_t big[] = {1000};
  so.n_grid = big;
  so.n_count = 1;
  so.seed = 1;
  int deg[] = {0};
  so.degrees = deg;
  so.degree_count = 1;
  CHECK(mn_sweep(&so, (dir / "s.csv").string().c_str()) == MN_ERR_CAPACITY);
}

TEST_CASE("persistence and entropy") {
  auto dir = temp_dir("persist");
  write_text(dir / "line.csv", "x,y,z\n0,0,0\n1,0,0\n2,0,0\n");
  mn_cloud* x = nullptr;
  REQUIRE(mn_cloud_read((dir / "line.csv").string().c_str(), &x) == MN_OK);
  CHECK(mn_cloud_size(x) == 3);
  mn_persistence_options po;
  mn_persistence_options_init(&po);
  po.method = MN_FILTRATION_MULTINBR_R;
  po.m = 1;
  po.max_degree = 1;
  mn_diagram* d = nullptr;
  REQUIRE(mn_persistence(x, &po, &d) == MN_OK);
  CHECK(mn_diagram_size(d) == 3);
  const std::string dpath = (dir / "line_diag.csv").string();
  REQUIRE(mn_diagram_write(d, dpath.c_str()) == MN_OK);
  CHECK(slurp(dpath) == "dim,birth,death\n0,1,2\n0,1,inf\n1,2,inf\n");
  double e[3];
  REQUIRE(mn_diagram_entropy(d, MN_INF_DROP, 0, e) == MN_OK);
  CHECK(e[0] == 0);
  REQUIRE(mn_diagram_entropy(d, MN_INF_CAP, 4, e) == MN_OK);
  CHECK(e[0] == doctest::Approx(-0.25 * std::log(0.25) - 0.75 * std::log(0.75)));

  const char* labels[] = {"line"};
  double rows[3] = {e[0], e[1], e[2]};
  REQUIRE(mn_feature_csv_write((dir / "f.csv").string().c_str(), labels, rows, 1) == MN_OK);
  CHECK(slurp(dir / "f.csv").rfind("label,e0,e1,e2\nline,", 0) == 0);
  mn_diagram_free(d);

  po.method = MN_FILTRATION_RIPS;
  REQUIRE(mn_persistence(x, &po, &d) == MN_OK);
  CHECK(mn_diagram_size(d) == 3);
  mn_diagram_free(d);
  po.method = MN_FILTRATION_MULTINBR_M;
  po.radius = 0;
  CHECK(mn_persistence(x, &po, &d) == MN_ERR_PARAMETER);
  mn_cloud_free(x);

  write_text(dir / "empty.csv", "x,y,z\n");
  REQUIRE(mn_cloud_read((dir / "empty.csv").string().c_str(), &x) == MN_OK);
  po.method = MN_FILTRATION_MULTINBR_R;
  REQUIRE(mn_persistence(x, &po, &d) == MN_OK);
  CHECK(mn_diagram_size(d) == 0);
  mn_diagram_free(d);
  mn_cloud_free(x);
}

TEST_CASE("datasets, classification and sweeps are reproducible") {
  auto dir = temp_dir("pipeline");
  mn_dataset_options dopt;
  mn_dataset_options_init(&dopt);
  dopt.points = 16;
  dopt.clouds_per_shape = 4;
  dopt.seed = 8;
  REQUIRE(mn_dataset_write(&dopt, (dir / "data").string().c_str()) == MN_OK);
  CHECK(fs::exists(dir / "data" / "manifest.csv"));

  mn_classify_options copt;
  mn_classify_options_init(&copt);
  copt.methods = "m2,rips";
  copt.repetitions = 2;
  copt.trees = 20;
  REQUIRE(mn_classify((dir / "data").string().c_str(), &copt, (dir / "a.csv").string().c_str()) ==
          MN_OK);
  REQUIRE(mn_classify_generated(&dopt, &copt, (dir / "b.csv").string().c_str()) == MN_OK);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(slurp(dir / "a.csv").rfind("points,method,mean_accuracy,std_accuracy,repetitions\n16,", 0) == 0);
  copt.methods = "m0";
  CHECK(mn_classify_generated(&dopt, &copt, (dir / "c.csv").string().c_str()) == MN_ERR_PARAMETER);

  mn_sweep_options so;
  mn_sweep_options_init(&so);
  size_t ns[] = {10, 14};
  int deg[] = {0, 1};
  so.kind = MN_SWEEP_VANISHING;
  so.n_grid = ns;
  so.n_count = 2;
  so.degrees = deg;
  so.degree_count = 2;
  so.p_value = 0.5;
  so.trials = 10;
  so.seed = 4;
  REQUIRE(mn_sweep(&so, (dir / "s1.csv").string().c_str()) == MN_OK);
  so.jobs = 3;
  REQUIRE(mn_sweep(&so, (dir / "s2.csv").string().c_str()) == MN_OK);
  CHECK(slurp(dir / "s1.csv") == slurp(dir / "s2.csv"));
  CHECK(slurp(dir / "s1.csv").find("n,param,degree_or_pattern,frequency,trials,bound,flags\n") !=
        std::string::npos);
}
