// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "multinbr/complex.hpp"
#include "multinbr/error.hpp"
#include "multinbr/homology.hpp"
#include "parallel.hpp"

namespace multinbr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double log_choose(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t j = 1; j <= k; ++j)
    c = c * static_cast<double>(n - k + j) / static_cast<double>(j);
  return std::round(c);
}

void check_bound_args(std::size_t n, double p, std::size_t m, std::size_t i) {
  if (i < 1 || i > n) throw ParameterError("need 1 <= i <= n");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  if (m < 1) throw ParameterError("m must be >= 1");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Short form for labels, e.g. "0.5", "-0.55".
std::string short_fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void validate_grid(const std::vector<std::size_t>& n_grid) {
  if (n_grid.empty()) throw ParameterError("n grid is empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) throw ParameterError("n must be >= 1");
    if (n_grid[i] > kSweepMaxN) throw CapacityError("n above the Monte Carlo cap");
    if (i && n_grid[i] <= n_grid[i - 1]) throw ParameterError("n grid must be ascending");
  }
}

bool in_closed(double x, double lo, double hi) {
  constexpr double tol = 1e-12;
  return x >= lo - tol && x <= hi + tol;
}

}  // namespace

double connectivity_bound(std::size_t n, double p, std::size_t m, std::size_t i) {
  check_bound_args(n, p, m, i);
  const double sets = choose(n, i);
  if (n - i < m) return sets;
  if (p == 1.0) return 0.0;
  if (p == 0.0) return sets;
  const double exponent = choose(n - i, m);
  const double q = std::pow(p, static_cast<double>(m * i));
  const double log_factor = exponent * std::log1p(-q);
  // Direct evaluation is exact for dyadic inputs; log space covers the
  // ranges where the power would under- or overflow or 1 - q loses digits.
  if (q >= 1e-8 && log_factor > -700.0) return sets * std::pow(1.0 - q, exponent);
  if (log_factor > -700.0) return sets * std::exp(log_factor);
  return std::exp(std::log(sets) + log_factor);
}

double neighborly_union_bound(std::size_t n, double p, std::size_t m, std::size_t i) {
  check_bound_args(n, p, m, i);
  const std::size_t trials = n - i;
  const double q = std::pow(p, static_cast<double>(i));
  double tail = 0.0;
  for (std::size_t k = 0; k < m && k <= trials; ++k) {
    if (q == 0.0) {
      tail += k == 0 ? 1.0 : 0.0;
      continue;
    }
    if (q == 1.0) {
      tail += k == trials ? 1.0 : 0.0;
      continue;
    }
    tail += std::exp(log_choose(static_cast<double>(trials), static_cast<double>(k)) +
                     static_cast<double>(k) * std::log(q) +
                     static_cast<double>(trials - k) * std::log1p(-q));
  }
  return choose(n, i) * std::min(1.0, tail);
}

namespace {

// Whether some i-subset of g has fewer than m common neighbours.
bool neighborly_fails(const Graph& g, std::size_t m, std::size_t i) {
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    const Bitset& na = g.neighbors(a);
    if (i == 1) {
      if (na.count() < m) return true;
      continue;
    }
    for (Vertex b = a + 1; b < n; ++b) {
      if (i == 2) {
        if (na.count_and(g.neighbors(b)) < m) return true;
        continue;
      }
      const Bitset nab = na & g.neighbors(b);
      for (Vertex c = b + 1; c < n; ++c)
        if (nab.count_and(g.neighbors(c)) < m) return true;
    }
  }
  return false;
}

}  // namespace

double mc_neighborly_failure(std::size_t n, double p, std::size_t m, std::size_t i,
                             std::size_t trials, std::uint64_t seed, unsigned jobs) {
  check_bound_args(n, p, m, i);
  if (i > 3) throw CapacityError("exhaustive i-subset search supports i <= 3");
  if (n > kSweepMaxN) throw CapacityError("n too large for exhaustive search");
  if (trials == 0) throw ParameterError("trials must be >= 1");
  std::vector<char> fail(trials, 0);
  detail::parallel_for(trials, jobs, [&](std::size_t t) {
    fail[t] = neighborly_fails(erdos_renyi(n, p, seed + t), m, i);
  });
  return static_cast<double>(std::count(fail.begin(), fail.end(), 1)) /
         static_cast<double>(trials);
}

bool SweepRow::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

bool SweepSummary::operator==(const SweepSummary& o) const {
  if (notes != o.notes || rows.size() != o.rows.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& a = rows[i];
    const auto& b = o.rows[i];
    const bool same_bound = a.bound == b.bound || (std::isnan(a.bound) && std::isnan(b.bound));
    if (a.n != b.n || a.param != b.param || a.degree_or_pattern != b.degree_or_pattern ||
        a.hits != b.hits || a.trials != b.trials || !same_bound || a.flags != b.flags)
      return false;
  }
  return true;
}

void write_sweep_report(std::ostream& out, const SweepSummary& s) {
  for (const auto& note : s.notes) out << "# " << note << '\n';
  out << "n,param,degree_or_pattern,frequency,trials,bound,flags\n";
  for (const auto& r : s.rows) {
    out << r.n << ',' << r.param << ',' << r.degree_or_pattern << ',' << fmt(r.frequency())
        << ',' << r.trials << ',' << (std::isnan(r.bound) ? std::string("nan") : fmt(r.bound))
        << ',';
    for (std::size_t i = 0; i < r.flags.size(); ++i) out << (i ? "|" : "") << r.flags[i];
    out << '\n';
  }
}

void write_sweep_report_file(const std::string& path, const SweepSummary& s) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write sweep report: " + path);
  write_sweep_report(out, s);
}

SweepSummary neighborly_sweep(const std::vector<std::size_t>& n_grid,
                              const std::vector<double>& p_grid,
                              const std::vector<std::size_t>& m_grid,
                              const std::vector<std::size_t>& i_grid, std::size_t trials,
                              std::uint64_t seed, unsigned jobs) {
  validate_grid(n_grid);
  if (p_grid.empty() || m_grid.empty() || i_grid.empty())
    throw ParameterError("p, m and i grids must be non-empty");
  SweepSummary s;
  s.notes = {"neighborly_sweep trials=" + std::to_string(trials) + " seed=" + std::to_string(seed),
             "frequency: some i-subset has fewer than m common neighbours",
             "bound = connectivity_bound(n, p, m, i); union = C(n,i) P(Bin(n-i, p^i) < m)"};
  for (std::size_t n : n_grid)
    for (double p : p_grid)
      for (std::size_t m : m_grid)
        for (std::size_t i : i_grid) {
          const double f = mc_neighborly_failure(n, p, m, i, trials, seed, jobs);
          SweepRow row{n, "p=" + short_fmt(p), "m" + std::to_string(m) + "_i" + std::to_string(i),
                       static_cast<std::size_t>(std::llround(f * static_cast<double>(trials))),
                       trials, connectivity_bound(n, p, m, i),
                       {"union=" + fmt(neighborly_union_bound(n, p, m, i)), "STATISTICAL"}};
          s.rows.push_back(std::move(row));
        }
  return s;
}

double PRule::p(std::size_t n) const {
  if (kind == Kind::kConstant) return value;
  return std::pow(static_cast<double>(n), value);
}

std::string PRule::describe() const {
  return (kind == Kind::kConstant ? "p=" : "alpha=") + short_fmt(value);
}

namespace {

std::vector<std::string> vanishing_flags(const PRule& rule, std::size_t n, std::size_t m,
                                         int l, double eps) {
  std::vector<std::string> flags;
  const double lg = std::log2(static_cast<double>(n));
  const double dl = l, dm = static_cast<double>(m);
  if (rule.kind == PRule::Kind::kConstant && rule.value == 0.5) {
    // Degree l corresponds to index l + 2 in the first range and to
    // l + m - 1 in the second.
    if (dl + 2 <= (1 - eps / dm) * lg) flags.push_back("low_degree_range");
    if (dl + dm - 1 >= (4 + eps) * lg) flags.push_back("high_degree_range");
  }
  if (rule.kind == PRule::Kind::kPower) {
    const double a = rule.value;
    if (in_closed(a, -1.0 / (dl + 2), 0.0)) flags.push_back("dense_interval");
    if (l >= 1) {
      const double hi = l % 2 == 0 ? -4.0 / (dl + 2) : -4.0 * (dl + 2) / ((dl + 1) * (dl + 3));
      if (in_closed(a, -2.0, hi)) flags.push_back("sparse_interval");
    }
  }
  flags.push_back("STATISTICAL");
  return flags;
}


}  // namespace

SweepSummary mc_vanishing_sweep(const std::vector<std::size_t>& n_grid, const PRule& rule,
                                std::size_t m, const std::vector<int>& degrees,
                                std::size_t trials, std::uint64_t seed, double eps,
                                unsigned jobs) {
  validate_grid(n_grid);
  if (m < 1) throw ParameterError("m must be >= 1");
  if (trials == 0) throw ParameterError("trials must be >= 1");
  if (degrees.empty()) throw ParameterError("no homology degrees requested");
  for (int l : degrees) {
    if (l < 0) throw ParameterError("homology degrees must be >= 0");
    if (l > kSweepMaxDegree) throw CapacityError("homology degree above the cap of 2");
  }
  if (rule.kind == PRule::Kind::kPower && rule.value > 0.0)
    throw ParameterError("alpha must be <= 0");
  const int top = *std::max_element(degrees.begin(), degrees.end());

  SweepSummary s;
  s.notes = {"mc_vanishing_sweep " + rule.describe() + " m=" + std::to_string(m) +
                 " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed),
             "homology degree cap 2; frequencies are of nonzero reduced Betti numbers",
             "bound = connectivity_bound(n, p, m, l + 2)"};
  for (std::size_t n : n_grid) {
    const double p = rule.p(n);
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p(n) outside [0, 1]");
    std::vector<BettiVector> betti(trials);
    std::vector<char> empty(trials, 0);
    detail::parallel_for(trials, jobs, [&](std::size_t t) {
      const auto k = multineighbor_complex(erdos_renyi(n, p, seed + t), m, top + 1);
      empty[t] = k.size() == 0;
      betti[t] = betti_numbers(k, top);
    });
    const auto empties = static_cast<std::size_t>(std::count(empty.begin(), empty.end(), 1));
    for (int l : degrees) {
      SweepRow row;
      row.n = n;
      row.param = rule.describe();
      row.degree_or_pattern = "l" + std::to_string(l);
      row.trials = trials;
      for (const auto& b : betti) row.hits += b[static_cast<std::size_t>(l)] != 0;
      const auto i = static_cast<std::size_t>(l) + 2;
      row.bound = i <= n ? connectivity_bound(n, p, m, i) : kNaN;
      row.flags = vanishing_flags(rule, n, m, l, eps);
      row.flags.push_back("empty=" + std::to_string(empties));
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

std::vector<std::size_t> window_orders(std::size_t n, std::size_t m, double eps) {
  if (n < 2) return {};
  const double lg = std::log2(static_cast<double>(n));
  const double dm = static_cast<double>(m);
  const double lo = ((2 * dm + 2) / (2 * dm + 1) + eps) * lg;
  const double hi = (2 - eps) * lg;
  std::vector<std::size_t> ks;
  for (auto k = static_cast<std::size_t>(std::max(3.0, std::floor(lo))); static_cast<double>(k) < hi; ++k)
    if (static_cast<double>(k) > lo) ks.push_back(k);
  return ks;
}

bool has_sphere_premise(const Graph& g, std::size_t k, std::size_t m) {
  for (const auto& c : maximal_cliques(g))
    if (c.size() == k && !clique_extends_to_xkm(g, c, m)) return true;
  return false;
}

SweepSummary mc_nonvanishing_window(const std::vector<std::size_t>& n_grid, std::size_t m,
                                    double eps, std::size_t trials, std::uint64_t seed,
                                    unsigned jobs) {
  validate_grid(n_grid);
  if (m < 1) throw ParameterError("m must be >= 1");
  if (trials == 0) throw ParameterError("trials must be >= 1");
  if (!(eps > 0.0)) throw ParameterError("eps must be > 0");

  SweepSummary s;
  s.notes = {"mc_nonvanishing_window p=0.5 m=" + std::to_string(m) + " eps=" + short_fmt(eps) +
                 " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed),
             "premise_k<k>: a maximal clique of order k not extendable to X_{k,m}",
             "betti_<q>: nonzero reduced Betti number q = k - 2, computed when q <= 2",
             "bound = n^{(m+1)k} 2^{-(2m+1)k(k-1)/2}, the X_{k,m} count estimate"};
  const std::string param = "p=0.5";
  for (std::size_t n : n_grid) {
    const auto ks = window_orders(n, m, eps);
    if (ks.empty()) {
      SweepRow row{n, param, "none", 0, trials, kNaN, {"window_empty", "STATISTICAL"}};
      s.rows.push_back(std::move(row));
      continue;
    }
    // premise[t][j], sphere[t][j] for window order ks[j].
    std::vector<std::vector<char>> premise(trials), nonzero(trials);
    detail::parallel_for(trials, jobs, [&](std::size_t t) {
      const Graph g = erdos_renyi(n, 0.5, seed + t);
      const auto cliques = maximal_cliques(g);
      premise[t].assign(ks.size(), 0);
      nonzero[t].assign(ks.size(), 0);
      for (std::size_t j = 0; j < ks.size(); ++j) {
        for (const auto& c : cliques)
          if (c.size() == ks[j] && !clique_extends_to_xkm(g, c, m)) {
            premise[t][j] = 1;
            break;
          }
        const int q = static_cast<int>(ks[j]) - 2;
        if (q <= kSweepMaxDegree)
          nonzero[t][j] = betti_numbers(multineighbor_complex(g, m, q + 1), q)[q] != 0;
      }
    });
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const double k = static_cast<double>(ks[j]), dm = static_cast<double>(m);
      const double bound = std::exp(((dm + 1) * k) * std::log(static_cast<double>(n)) -
                                    (2 * dm + 1) * k * (k - 1) / 2 * std::log(2.0));
      SweepRow row{n, param, "premise_k" + std::to_string(ks[j]), 0, trials, bound,
                   {"STATISTICAL"}};
      if (j == 0) row.flags.insert(row.flags.begin(), "window_bottom");
      for (std::size_t t = 0; t < trials; ++t) row.hits += premise[t][j];
      s.rows.push_back(std::move(row));
      const int q = static_cast<int>(ks[j]) - 2;
      if (q <= kSweepMaxDegree) {
        SweepRow b{n, param, "betti_" + std::to_string(q), 0, trials, kNaN, {"STATISTICAL"}};
        for (std::size_t t = 0; t < trials; ++t) b.hits += nonzero[t][j];
        s.rows.push_back(std::move(b));
      }
    }
  }
  return s;
}

Graph sphere_fixture() {
  GraphBuilder b(6);
  b.add_edge(0, 1).add_edge(0, 2).add_edge(1, 2).add_edge(0, 3).add_edge(3, 4).add_edge(4, 5);
  return std::move(b).build();
}

SweepSummary subgraph_threshold_check(std::size_t k, std::size_t m,
                                      const std::vector<double>& alpha_grid,
                                      const std::vector<std::size_t>& n_grid,
                                      std::size_t trials, std::uint64_t seed, unsigned jobs) {
  validate_grid(n_grid);
  if (k < 1 || m < 1) throw ParameterError("need k >= 1 and m >= 1");
  if (k > 4 || m > 2) throw CapacityError("exact pattern search supports k <= 4, m <= 2");
  if (trials == 0) throw ParameterError("trials must be >= 1");
  if (alpha_grid.empty()) throw ParameterError("alpha grid is empty");
  for (double a : alpha_grid)
    if (!(a <= 0.0)) throw ParameterError("alpha must be <= 0");

  const double dk = static_cast<double>(k), dm = static_cast<double>(m);
  const double lo = -2.0 / (dk + 1);
  const double hi = -2.0 * (dm + 1) / ((2 * dm + 1) * (dk + 1));
  const std::size_t order = k + 2;
  const std::string clique = "K" + std::to_string(order);
  const std::string fan = "X" + std::to_string(order) + "_" + std::to_string(m);
  // Threshold exponents -1/lambda of K_{k+2} and X_{k+2,m}.
  const double od = static_cast<double>(order);
  const double clique_exp = -2.0 / (od - 1);
  const double fan_exp = -2.0 * (dm + 1) / ((2 * dm + 1) * (od - 1));

  SweepSummary s;
  s.notes = {"subgraph_threshold_check k=" + std::to_string(k) + " m=" + std::to_string(m) +
                 " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed),
             "bound = threshold exponent -1/lambda of the pattern; p = n^alpha",
             "threshold_interval: " + short_fmt(lo) + " < alpha < " + short_fmt(hi)};
  for (double a : alpha_grid) {
    const bool inside = a > lo && a < hi;
    for (std::size_t n : n_grid) {
      const double p = std::pow(static_cast<double>(n), a);
      std::vector<char> has_clique(trials, 0), has_fan(trials, 0);
      detail::parallel_for(trials, jobs, [&](std::size_t t) {
        const Graph g = erdos_renyi(n, p, seed + t);
        has_clique[t] = contains_clique(g, order);
        has_fan[t] = has_clique[t] && contains_xkm(g, order, m);
      });
      std::vector<std::string> flags;
      if (inside) flags.push_back("threshold_interval");
      flags.push_back("STATISTICAL");
      const std::string param = "alpha=" + short_fmt(a);
      s.rows.push_back({n, param, clique,
                        static_cast<std::size_t>(std::count(has_clique.begin(), has_clique.end(), 1)),
                        trials, clique_exp, flags});
      s.rows.push_back({n, param, fan,
                        static_cast<std::size_t>(std::count(has_fan.begin(), has_fan.end(), 1)),
                        trials, fan_exp, flags});
    }
  }
  return s;
}

}  // namespace multinbr
