// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0
//
// Runs the built command-line binary end to end.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "multinbr_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

Run run(const std::string& args) {
  const fs::path err = work_dir() / "stderr.txt";
  const std::string cmd = std::string("\"") + MULTINBR_CLI + "\" " + args + " 2>\"" + err.string() + "\"";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string p(const std::string& name) { return (work_dir() / name).string(); }

// Runs, then reruns from the sidecar into a second path; both outputs must match.
void check_rerun(const std::string& args, const std::string& out, const std::string& again) {
  Run first = run(args + " --out " + p(out));
  REQUIRE(first.code == 0);
  Run second = run("rerun " + p(out) + ".config.json --out " + p(again));
  REQUIRE(second.code == 0);
  CHECK(slurp(p(out)) == slurp(p(again)));
  CHECK_FALSE(slurp(p(out)).empty());
}

}  // namespace

TEST_CASE("betti on a graph file") {
  write_text(p("k4.txt"), "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  Run r = run("betti --graph " + p("k4.txt") + " --m 1 --out " + p("k4_betti.txt"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("config: ") == 0);
  CHECK(r.out.find("dim 0: 0\ndim 1: 0\ndim 2: 1\n") != std::string::npos);
  CHECK(slurp(p("k4_betti.txt")) == "dim 0: 0\ndim 1: 0\ndim 2: 1\n");

  Run c = run("complex --graph " + p("k4.txt") + " --m 1 --out " + p("k4.cx"));
  REQUIRE(c.code == 0);
  CHECK(c.out.find("complex: dimension 2") != std::string::npos);
  Run b = run("betti --complex " + p("k4.cx") + " --out " + p("k4_betti2.txt"));
  REQUIRE(b.code == 0);
  CHECK(slurp(p("k4_betti2.txt")) == slurp(p("k4_betti.txt")));
}

TEST_CASE("bound prints the exact value") {
  Run r = run("bound n=10 p=0.5 m=1 i=1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n0.01953125\n") != std::string::npos);
}

TEST_CASE("errors give one line and a status exit code") {
  Run bad_p = run("bound n=10 p=1.5 m=1 i=1");
  CHECK(bad_p.code == 2);
  CHECK(bad_p.err.rfind("multinbr: error code=parameter status=2 message=", 0) == 0);
  CHECK(std::count(bad_p.err.begin(), bad_p.err.end(), '\n') == 1);

  Run missing = run("betti --graph " + p("nope.txt") + " --out " + p("nope_betti.txt"));
  CHECK(missing.code == 6);
  CHECK(missing.err.find("code=io") != std::string::npos);

  write_text(p("broken.txt"), "n 3\n2 1\n");
  CHECK(run("complex --graph " + p("broken.txt") + " --out " + p("broken.cx")).code == 4);
  CHECK(run("dataset --points 16 --out " + p("noseed")).code == 2);
  CHECK(run("sweep --n-grid 10 --out " + p("noseed.csv")).code != 0);
  CHECK(run("classify --seed 1 --points 3 --out " + p("tiny.csv")).code == 2);
  CHECK(run("sweep --kind bogus --n-grid 10 --seed 1 --out " + p("bogus.csv")).code == 2);
  CHECK(run("rerun " + p("absent.json")).code == 6);
}

TEST_CASE("persistence of an empty and a small cloud") {
  write_text(p("empty.csv"), "x,y,z\n");
  Run r = run("persist --cloud " + p("empty.csv") + " --out " + p("empty_diag.csv"));
  REQUIRE(r.code == 0);
  CHECK(slurp(p("empty_diag.csv")) == "dim,birth,death\n");

  write_text(p("line.csv"), "x,y,z\n0,0,0\n1,0,0\n2,0,0\n");
  check_rerun("persist --cloud " + p("line.csv") + " --method rips", "line_diag.csv",
              "line_diag2.csv");
  Run e = run("entropy " + p("line_diag.csv") + " --inf-bars cap --cap 4 --out " + p("line_f.csv"));
  REQUIRE(e.code == 0);
  CHECK(slurp(p("line_f.csv")).rfind("label,e0,e1,e2\nline_diag,", 0) == 0);
}

TEST_CASE("reruns reproduce outputs byte for byte") {
  check_rerun("sweep --kind vanishing --n-grid 10,14 --p 0.5 --degrees 0,1 --trials 8 --seed 3",
              "sweep.csv", "sweep2.csv");
  check_rerun("sweep --kind threshold --k 2 --n-grid 12 --alpha-grid -0.9,-0.5 --trials 5 --seed 2",
              "thr.csv", "thr2.csv");
  check_rerun("classify --points 16 --per-shape 4 --seed 5 --methods m2,rips --repetitions 2 --trees 20",
              "cls.csv", "cls2.csv");

  Run d = run("dataset --points 16 --per-shape 2 --seed 9 --out " + p("ds"));
  REQUIRE(d.code == 0);
  Run d2 = run("rerun " + p("ds") + ".config.json --out " + p("ds2"));
  REQUIRE(d2.code == 0);
  for (const auto& entry : fs::recursive_directory_iterator(p("ds"))) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), p("ds"));
    CHECK(slurp(entry.path()) == slurp(fs::path(p("ds2")) / rel));
  }
}
