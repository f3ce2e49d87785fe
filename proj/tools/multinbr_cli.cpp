// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Every subcommand first resolves its flags into a
// JSON config, echoes it, and then runs from that config alone, so
// `multinbr rerun <out>.config.json` repeats a run exactly.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "multinbr/multinbr.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Failure {
  mn_status status;
  std::string message;
};

void check(mn_status s) {
  if (s != MN_OK) throw Failure{s, mn_last_error()};
}

[[noreturn]] void bad(const std::string& msg) { throw Failure{MN_ERR_PARAMETER, msg}; }

std::string default_out(const std::string& name) {
  const char* root = std::getenv("MULTINBR_DATA_DIR");
  return (fs::path(root && *root ? root : ".") / name).string();
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::stringstream one(tok);
    T v{};
    if (!(one >> v) || !one.eof()) bad(std::string("bad value in ") + what + ": " + tok);
    out.push_back(v);
  }
  if (out.empty()) bad(std::string("empty list for ") + what);
  return out;
}

// Handle wrappers so failures never leak.
template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using GraphH = Handle<mn_graph, mn_graph_free>;
using ComplexH = Handle<mn_complex, mn_complex_free>;
using CloudH = Handle<mn_cloud, mn_cloud_free>;
using DiagramH = Handle<mn_diagram, mn_diagram_free>;

mn_infinite_bars inf_policy(const std::string& s) {
  if (s == "drop") return MN_INF_DROP;
  if (s == "cap") return MN_INF_CAP;
  bad("--inf-bars must be drop or cap");
}

mn_noise noise_law(const std::string& s) {
  if (s == "uniform") return MN_NOISE_UNIFORM;
  if (s == "gauss") return MN_NOISE_GAUSSIAN;
  bad("--noise must be uniform or gauss");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Failure{MN_ERR_IO, "cannot write " + path};
  out << text;
}

// --- execution from a resolved config ---------------------------------------

void run_complex(const json& c) {
  GraphH g;
  check(mn_graph_read(c["graph"].get<std::string>().c_str(), &g.p));
  ComplexH k;
  check(mn_complex_build(g.p, c["m"], c["max_dim"], &k.p));
  check(mn_complex_write(k.p, c["out"].get<std::string>().c_str()));
  std::cout << "complex: dimension " << mn_complex_dimension(k.p) << '\n';
}

void run_betti(const json& c) {
  ComplexH k;
  if (c.contains("complex")) {
    check(mn_complex_read(c["complex"].get<std::string>().c_str(), &k.p));
  } else {
    GraphH g;
    check(mn_graph_read(c["graph"].get<std::string>().c_str(), &g.p));
    check(mn_complex_build(g.p, c["m"], c["max_dim"], &k.p));
  }
  const int q = c["max_degree"];
  std::vector<size_t> b(static_cast<size_t>(q) + 1);
  check(mn_complex_betti(k.p, q, b.data()));
  std::string report;
  for (int d = 0; d <= q; ++d)
    report += "dim " + std::to_string(d) + ": " + std::to_string(b[static_cast<size_t>(d)]) + "\n";
  write_text(c["out"], report);
  std::cout << report;
}

void run_persist(const json& c) {
  CloudH x;
  check(mn_cloud_read(c["cloud"].get<std::string>().c_str(), &x.p));
  mn_persistence_options o;
  mn_persistence_options_init(&o);
  const std::string method = c["method"];
  if (method == "multinbr-r") o.method = MN_FILTRATION_MULTINBR_R;
  else if (method == "multinbr-m") o.method = MN_FILTRATION_MULTINBR_M;
  else if (method == "rips") o.method = MN_FILTRATION_RIPS;
  else bad("--method must be multinbr-r, multinbr-m or rips");
  o.m = c["m"];
  o.max_dim = c["max_dim"];
  o.max_degree = c["max_degree"];
  o.r_max = c["r_max"];
  o.radius = c["radius"];
  DiagramH d;
  check(mn_persistence(x.p, &o, &d.p));
  check(mn_diagram_write(d.p, c["out"].get<std::string>().c_str()));
  std::cout << "persist: " << mn_diagram_size(d.p) << " points\n";
}

void run_entropy(const json& c) {
  std::vector<std::string> labels;
  std::vector<double> rows;
  const auto policy = inf_policy(c["inf_bars"]);
  for (const auto& path : c["diagrams"]) {
    DiagramH d;
    check(mn_diagram_read(path.get<std::string>().c_str(), &d.p));
    double e[3];
    check(mn_diagram_entropy(d.p, policy, c["cap"], e));
    rows.insert(rows.end(), e, e + 3);
    labels.push_back(c.contains("label") ? c["label"].get<std::string>()
                                         : fs::path(path.get<std::string>()).stem().string());
  }
  std::vector<const char*> ptrs;
  for (const auto& l : labels) ptrs.push_back(l.c_str());
  check(mn_feature_csv_write(c["out"].get<std::string>().c_str(), ptrs.data(), rows.data(),
                             labels.size()));
  std::cout << "entropy: " << labels.size() << " rows\n";
}

mn_dataset_options dataset_options(const json& c) {
  mn_dataset_options o;
  mn_dataset_options_init(&o);
  o.points = c["points"];
  o.clouds_per_shape = c["per_shape"];
  o.magnitude = c["magnitude"];
  o.noise = noise_law(c["noise"]);
  o.seed = c["seed"];
  return o;
}

void run_dataset(const json& c) {
  const auto o = dataset_options(c);
  check(mn_dataset_write(&o, c["out"].get<std::string>().c_str()));
  std::cout << "dataset: " << 6 * o.clouds_per_shape << " clouds\n";
}

void run_classify(const json& c) {
  mn_classify_options o;
  mn_classify_options_init(&o);
  const std::string methods = c["methods"];
  o.methods = methods.c_str();
  o.repetitions = c["repetitions"];
  o.train_fraction = c["train_fraction"];
  o.max_dim = c["max_dim"];
  o.max_degree = c["max_degree"];
  o.inf_bars = inf_policy(c["inf_bars"]);
  o.inf_cap = c["cap"];
  o.trees = c["trees"];
  o.max_depth = c["depth"];
  o.shuffle_labels = c["shuffle_labels"].get<bool>();
  o.jobs = c["jobs"];
  const std::string out = c["out"];
  if (c.contains("dataset")) {
    check(mn_classify(c["dataset"].get<std::string>().c_str(), &o, out.c_str()));
  } else {
    const auto d = dataset_options(c);
    check(mn_classify_generated(&d, &o, out.c_str()));
  }
  std::cout << "classify: wrote " << out << '\n';
}

void run_sweep(const json& c) {
  mn_sweep_options o;
  mn_sweep_options_init(&o);
  const std::string kind = c["kind"];
  const auto ns = c["n_grid"].get<std::vector<size_t>>();
  o.n_grid = ns.data();
  o.n_count = ns.size();
  o.m = c["m"];
  o.eps = c["eps"];
  o.trials = c["trials"];
  o.seed = c["seed"];
  o.jobs = c["jobs"];
  std::vector<int> degrees;
  std::vector<double> alphas, ps;
  std::vector<size_t> ms, is;
  if (kind == "vanishing") {
    o.kind = MN_SWEEP_VANISHING;
    o.p_power = c.contains("alpha");
    o.p_value = o.p_power ? c["alpha"].get<double>() : c["p"].get<double>();
    degrees = c["degrees"].get<std::vector<int>>();
    o.degrees = degrees.data();
    o.degree_count = degrees.size();
  } else if (kind == "window") {
    o.kind = MN_SWEEP_WINDOW;
  } else if (kind == "threshold") {
    o.kind = MN_SWEEP_THRESHOLD;
    o.k = c["k"];
    alphas = c["alpha_grid"].get<std::vector<double>>();
    o.alpha_grid = alphas.data();
    o.alpha_count = alphas.size();
  } else if (kind == "neighborly") {
    o.kind = MN_SWEEP_NEIGHBORLY;
    ps = c["p_grid"].get<std::vector<double>>();
    ms = c["m_grid"].get<std::vector<size_t>>();
    is = c["i_grid"].get<std::vector<size_t>>();
    o.p_grid = ps.data();
    o.p_count = ps.size();
    o.m_grid = ms.data();
    o.m_count = ms.size();
    o.i_grid = is.data();
    o.i_count = is.size();
  } else {
    bad("--kind must be vanishing, window, threshold or neighborly");
  }
  check(mn_sweep(&o, c["out"].get<std::string>().c_str()));
  std::cout << "sweep: wrote " << c["out"].get<std::string>() << '\n';
}

void run_bound(const json& c) {
  double v = 0.0;
  check(mn_connectivity_bound(c["n"], c["p"], c["m"], c["i"], &v));
  const std::string text = fmt17(v) + "\n";
  std::cout << text;
  if (c.contains("out")) write_text(c["out"], text);
}

bool stochastic(const std::string& cmd) {
  return cmd == "dataset" || cmd == "classify" || cmd == "sweep";
}

void execute(const json& config) {
  if (!config.is_object() || !config.contains("subcommand") || !config.contains("params"))
    throw Failure{MN_ERR_FORMAT, "config must have 'subcommand' and 'params'"};
  const std::string cmd = config["subcommand"];
  const json& c = config["params"];
  if (stochastic(cmd) && !c.contains("seed") && !c.contains("dataset"))
    bad("a seed is required for " + cmd);

  std::cout << "config: " << config.dump() << '\n';
  if (c.contains("out")) write_text(c["out"].get<std::string>() + ".config.json", config.dump(2) + "\n");

  try {
    if (cmd == "complex") run_complex(c);
    else if (cmd == "betti") run_betti(c);
    else if (cmd == "persist") run_persist(c);
    else if (cmd == "entropy") run_entropy(c);
    else if (cmd == "dataset") run_dataset(c);
    else if (cmd == "classify") run_classify(c);
    else if (cmd == "sweep") run_sweep(c);
    else if (cmd == "bound") run_bound(c);
    else throw Failure{MN_ERR_FORMAT, "unknown subcommand in config: " + cmd};
  } catch (const json::exception& e) {
    throw Failure{MN_ERR_FORMAT, std::string("config: ") + e.what()};
  }
}

int fail(const Failure& f) {
  std::string msg = f.message;
  for (char& ch : msg)
    if (ch == '\n' || ch == '\r') ch = ' ';
  std::cerr << "multinbr: error code=" << mn_status_name(f.status)
            << " status=" << static_cast<int>(f.status) << " message=" << json(msg).dump()
            << '\n';
  return static_cast<int>(f.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multineighbour complexes, persistence and experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mn_version());

  json params;
  std::string out;

  // Shared option values.
  size_t m = 1, trials = 100, points = 36, per_shape = 8, repetitions = 20, trees = 100, k = 2;
  int max_dim = 3, max_degree = 2, depth = 8;
  double r_max = 0.0, radius = 1.0, magnitude = 1.0, cap = 0.0, eps = 0.1, train_fraction = 0.75;
  double p = 0.5, alpha = 0.0;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string noise = "uniform", inf_bars = "drop", graph, complex_path, cloud, method = "multinbr-r";
  std::string dataset, methods = "m1,m2,m3,m4,m5,rips", kind = "vanishing", label;
  std::string n_grid, degrees = "0", alpha_grid, p_grid = "0.3,0.5,0.7", m_grid = "1,2", i_grid = "1,2";
  std::vector<std::string> diagrams, kv;
  bool shuffle = false;
  std::string config_path;

  auto add_out = [&](CLI::App* s) { s->add_option("--out,-o", out, "output path"); };
  auto add_seed = [&](CLI::App* s) { return s->add_option("--seed", seed, "random seed"); };
  auto add_jobs = [&](CLI::App* s) {
    s->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* c_complex = app.add_subcommand("complex", "graph file -> multineighbour complex file");
  c_complex->add_option("--graph", graph, "graph file")->required();
  c_complex->add_option("--m", m, "common-neighbour threshold");
  c_complex->add_option("--max-dim", max_dim, "simplex dimension cap");
  add_out(c_complex);

  auto* c_betti = app.add_subcommand("betti", "reduced Betti numbers of a complex");
  auto* o_cx = c_betti->add_option("--complex", complex_path, "complex file");
  auto* o_gr = c_betti->add_option("--graph", graph, "graph file (complex built with --m)");
  o_cx->excludes(o_gr);
  c_betti->add_option("--m", m, "common-neighbour threshold");
  c_betti->add_option("--max-dim", max_dim, "simplex dimension cap when building");
  c_betti->add_option("--max-degree", max_degree, "highest homology degree");
  add_out(c_betti);

  auto* c_persist = app.add_subcommand("persist", "point cloud -> persistence diagram");
  c_persist->add_option("--cloud", cloud, "cloud CSV")->required();
  c_persist->add_option("--method", method, "multinbr-r | multinbr-m | rips");
  c_persist->add_option("--m", m, "m (multinbr-r) or m_max (multinbr-m)");
  c_persist->add_option("--r-max", r_max, "grade cap, 0 = diameter");
  c_persist->add_option("--radius", radius, "proximity radius for multinbr-m");
  c_persist->add_option("--max-dim", max_dim, "simplex dimension cap");
  c_persist->add_option("--max-degree", max_degree, "highest homology degree");
  add_out(c_persist);

  auto* c_entropy = app.add_subcommand("entropy", "diagram CSVs -> feature CSV");
  c_entropy->add_option("diagrams", diagrams, "diagram CSV files")->required();
  c_entropy->add_option("--inf-bars", inf_bars, "drop | cap");
  c_entropy->add_option("--cap", cap, "death value for capped infinite bars");
  c_entropy->add_option("--label", label, "row label (default: file stem)");
  add_out(c_entropy);

  auto* c_dataset = app.add_subcommand("dataset", "generate the labelled shape dataset");
  c_dataset->add_option("--points", points, "points per cloud");
  c_dataset->add_option("--per-shape", per_shape, "clouds per shape");
  c_dataset->add_option("--magnitude", magnitude, "noise magnitude");
  c_dataset->add_option("--noise", noise, "uniform | gauss");
  add_seed(c_dataset);
  add_out(c_dataset);

  auto* c_classify = app.add_subcommand("classify", "accuracy table of the entropy features");
  c_classify->add_option("--dataset", dataset, "dataset directory (else generated)");
  c_classify->add_option("--points", points, "points per cloud when generating");
  c_classify->add_option("--per-shape", per_shape, "clouds per shape when generating");
  c_classify->add_option("--magnitude", magnitude, "noise magnitude when generating");
  c_classify->add_option("--noise", noise, "uniform | gauss");
  add_seed(c_classify);
  c_classify->add_option("--methods", methods, "comma list of m<k> and rips");
  c_classify->add_option("--repetitions", repetitions, "repetitions");
  c_classify->add_option("--train-fraction", train_fraction, "stratified training share");
  c_classify->add_option("--max-dim", max_dim, "simplex dimension cap");
  c_classify->add_option("--max-degree", max_degree, "highest homology degree");
  c_classify->add_option("--inf-bars", inf_bars, "drop | cap");
  c_classify->add_option("--cap", cap, "death value for capped infinite bars");
  c_classify->add_option("--trees", trees, "forest size");
  c_classify->add_option("--depth", depth, "tree depth");
  c_classify->add_flag("--shuffle-labels", shuffle, "label-permutation control");
  add_jobs(c_classify);
  add_out(c_classify);

  auto* c_sweep = app.add_subcommand("sweep", "Monte Carlo sweeps over G(n,p)");
  c_sweep->add_option("--kind", kind, "vanishing | window | threshold | neighborly");
  c_sweep->add_option("--n-grid", n_grid, "ascending n values, e.g. 20,40,80")->required();
  auto* o_p = c_sweep->add_option("--p", p, "constant edge probability");
  auto* o_alpha = c_sweep->add_option("--alpha", alpha, "p = n^alpha");
  o_p->excludes(o_alpha);
  c_sweep->add_option("--m", m, "common-neighbour threshold");
  c_sweep->add_option("--degrees", degrees, "homology degrees, e.g. 0,1");
  c_sweep->add_option("--eps", eps, "epsilon of the predicted ranges");
  c_sweep->add_option("--k", k, "threshold sweep: patterns K_{k+2}, X_{k+2,m}");
  c_sweep->add_option("--alpha-grid", alpha_grid, "threshold sweep exponents");
  c_sweep->add_option("--p-grid", p_grid, "neighborly sweep p values");
  c_sweep->add_option("--m-grid", m_grid, "neighborly sweep m values");
  c_sweep->add_option("--i-grid", i_grid, "neighborly sweep i values");
  c_sweep->add_option("--trials", trials, "trials per cell");
  add_seed(c_sweep)->required();
  add_jobs(c_sweep);
  add_out(c_sweep);

  auto* c_bound = app.add_subcommand("bound", "print connectivity_bound(n, p, m, i)");
  c_bound->add_option("assignments", kv, "n=.. p=.. m=.. i=..")->required();
  add_out(c_bound);

  auto* c_rerun = app.add_subcommand("rerun", "repeat a run from its .config.json");
  c_rerun->add_option("config", config_path, "config file")->required();
  c_rerun->add_option("--out,-o", out, "override the output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail({MN_ERR_PARAMETER, e.what()});
  }

  try {
    json config;
    auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    auto out_or = [&](const std::string& name) { return out.empty() ? default_out(name) : out; };

    if (cmd == "rerun") {
      std::ifstream in(config_path);
      if (!in) throw Failure{MN_ERR_IO, "cannot read " + config_path};
      try {
        config = json::parse(in);
      } catch (const json::exception& e) {
        throw Failure{MN_ERR_FORMAT, std::string("config: ") + e.what()};
      }
      if (!out.empty()) config["params"]["out"] = out;
      execute(config);
      return 0;
    }

    if (max_dim < 0 || max_degree < 0) bad("--max-dim and --max-degree must be >= 0");
    config["subcommand"] = cmd;
    if (cmd == "complex") {
      params = {{"graph", graph}, {"m", m}, {"max_dim", max_dim}, {"out", out_or("complex.txt")}};
    } else if (cmd == "betti") {
      if (complex_path.empty() && graph.empty()) bad("betti needs --complex or --graph");
      params = {{"max_degree", max_degree}, {"out", out_or("betti.txt")}};
      if (!complex_path.empty()) {
        params["complex"] = complex_path;
      } else {
        if (max_dim < max_degree + 1) bad("--max-dim must exceed --max-degree");
        params["graph"] = graph;
        params["m"] = m;
        params["max_dim"] = max_dim;
      }
    } else if (cmd == "persist") {
      params = {{"cloud", cloud},   {"method", method},         {"m", m},
                {"r_max", r_max},   {"radius", radius},         {"max_dim", max_dim},
                {"max_degree", max_degree}, {"out", out_or("diagram.csv")}};
    } else if (cmd == "entropy") {
      inf_policy(inf_bars);
      params = {{"diagrams", diagrams}, {"inf_bars", inf_bars}, {"cap", cap},
                {"out", out_or("features.csv")}};
      if (!label.empty()) params["label"] = label;
    } else if (cmd == "dataset" || cmd == "classify") {
      noise_law(noise);
      if (cmd == "dataset" && c_dataset->count("--seed") == 0) bad("a seed is required: --seed");
      if (cmd == "classify" && dataset.empty() && c_classify->count("--seed") == 0)
        bad("a seed is required: --seed (or --dataset)");
      if (cmd == "classify" && !dataset.empty()) {
        params = {{"dataset", dataset}};
      } else {
        if (points < 4) bad("--points must be >= 4");
        params = {{"points", points}, {"per_shape", per_shape}, {"magnitude", magnitude},
                  {"noise", noise}, {"seed", seed}};
      }
      if (cmd == "dataset") {
        params["out"] = out_or("dataset");
      } else {
        inf_policy(inf_bars);
        params.update(json{{"methods", methods},
                           {"repetitions", repetitions},
                           {"train_fraction", train_fraction},
                           {"max_dim", max_dim},
                           {"max_degree", max_degree},
                           {"inf_bars", inf_bars},
                           {"cap", cap},
                           {"trees", trees},
                           {"depth", depth},
                           {"shuffle_labels", shuffle},
                           {"jobs", jobs},
                           {"out", out_or("results.csv")}});
      }
    } else if (cmd == "sweep") {
      params = {{"kind", kind},   {"n_grid", parse_list<size_t>(n_grid, "--n-grid")},
                {"m", m},         {"eps", eps},
                {"trials", trials}, {"seed", seed},
                {"jobs", jobs},   {"out", out_or("sweep.csv")}};
      if (kind == "vanishing") {
        if (c_sweep->count("--alpha")) params["alpha"] = alpha;
        else params["p"] = p;
        params["degrees"] = parse_list<int>(degrees, "--degrees");
      } else if (kind == "threshold") {
        if (alpha_grid.empty()) bad("threshold sweep needs --alpha-grid");
        params["k"] = k;
        params["alpha_grid"] = parse_list<double>(alpha_grid, "--alpha-grid");
      } else if (kind == "neighborly") {
        params["p_grid"] = parse_list<double>(p_grid, "--p-grid");
        params["m_grid"] = parse_list<size_t>(m_grid, "--m-grid");
        params["i_grid"] = parse_list<size_t>(i_grid, "--i-grid");
      } else if (kind != "window") {
        bad("--kind must be vanishing, window, threshold or neighborly");
      }
    } else if (cmd == "bound") {
      for (const auto& a : kv) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) bad("expected key=value, got " + a);
        const std::string key = a.substr(0, eq), val = a.substr(eq + 1);
        if (key == "p") params["p"] = parse_list<double>(val, "p").at(0);
        else if (key == "n" || key == "m" || key == "i") params[key] = parse_list<size_t>(val, key.c_str()).at(0);
        else bad("unknown bound parameter: " + key);
      }
      for (const char* key : {"n", "p", "m", "i"})
        if (!params.contains(key)) bad(std::string("bound needs ") + key + "=");
      if (!out.empty()) params["out"] = out;
    }
    config["params"] = params;
    execute(config);
  } catch (const Failure& f) {
    return fail(f);
  } catch (const std::exception& e) {
    return fail({MN_ERR_INTERNAL, e.what()});
  }
  return 0;
}
