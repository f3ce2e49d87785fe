// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#include "multinbr/homology.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "multinbr/error.hpp"
#include "multinbr/simplex.hpp"

namespace multinbr {

namespace {

/// Stores reduced columns and which column owns each pivot row. Pivot is
/// the largest row index of a column.
class ColumnReducer {
 public:
  explicit ColumnReducer(std::size_t rows) : owner_(rows, kNoPivot) {}

  /// Reduces `col` against the stored columns. Nonzero results are stored
  /// and their pivot returned; zero results return kNoPivot.
  std::uint32_t reduce_and_store(std::vector<std::uint32_t>& col) {
    while (!col.empty()) {
      const std::uint32_t low = col.back();
      const std::uint32_t j = owner_[low];
      if (j == kNoPivot) {
        owner_[low] = static_cast<std::uint32_t>(stored_.size());
        stored_.push_back(col);
        return low;
      }
      add_into(col, stored_[j]);
    }
    return kNoPivot;
  }

 private:
  void add_into(std::vector<std::uint32_t>& col,
                const std::vector<std::uint32_t>& other) {
    scratch_.clear();
    std::set_symmetric_difference(col.begin(), col.end(), other.begin(),
                                  other.end(), std::back_inserter(scratch_));
    col.swap(scratch_);
  }

  std::vector<std::uint32_t> owner_;
  std::vector<std::vector<std::uint32_t>> stored_;
  std::vector<std::uint32_t> scratch_;
};

/// F's simplices up to a dimension cap, validated and indexed.
struct IndexedFiltration {
  std::vector<const FilteredSimplex*> simplices;
  std::size_t universe = 0;
  SimplexIndex index;
};

IndexedFiltration index_filtration(const FilteredComplex& f,
                                   int max_simplex_dim) {
  std::size_t universe = f.universe;
  const FilteredSimplex* prev = nullptr;
  for (const auto& s : f.simplices) {
    if (s.vertices.empty())
      throw StructuralError("filtration contains an empty simplex");
    for (std::size_t i = 1; i < s.vertices.size(); ++i)
      if (s.vertices[i - 1] >= s.vertices[i])
        throw StructuralError("simplex vertices not strictly increasing");
    if (std::isnan(s.grade)) throw StructuralError("NaN grade in filtration");
    if (prev && !filtration_less(*prev, s))
      throw StructuralError("filtration is not sorted by (grade, dim, ids)");
    universe = std::max<std::size_t>(universe, std::size_t{s.vertices.back()} + 1);
    prev = &s;
  }
  IndexedFiltration out{{}, universe, SimplexIndex(universe, max_simplex_dim)};
  for (const auto& s : f.simplices) {
    if (s.dim() > max_simplex_dim) continue;
    const auto id = static_cast<std::uint32_t>(out.simplices.size());
    for (const auto& facet : facets(s.vertices)) {
      const std::uint32_t fid = out.index.find(facet);
      if (fid == SimplexIndex::kAbsent)
        throw StructuralError("filtration is not closed under faces");
    }
    out.index.insert(s.vertices, id);
    out.simplices.push_back(&s);
  }
  return out;
}

void finish(PersistenceDiagram& d) {
  std::sort(d.points.begin(), d.points.end());
}

}  // namespace

BettiVector betti_numbers(const SimplicialComplex& k, int max_degree) {
  if (max_degree < 0) throw ParameterError("max_degree must be >= 0");
  BettiVector out;
  out.values.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  if (k.empty()) return out;

  const int top = std::min(max_degree + 1, k.dimension());
  // rank[q] = rank of the boundary map out of q-chains; rank[0] is the
  // augmentation.
  std::vector<std::size_t> rank(static_cast<std::size_t>(max_degree) + 2, 0);
  rank[0] = 1;

  // Twist: reduce high dimensions first; a pivot row in dimension q-1
  // marks a q-1 column that would reduce to zero.
  std::vector<char> cleared;
  for (int q = top; q >= 1; --q) {
    const auto& cols = k.simplices(q);
    const auto& rows = k.simplices(q - 1);
    SimplexIndex row_index(k.universe(), q - 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
      row_index.insert(rows[i], static_cast<std::uint32_t>(i));
    ColumnReducer reducer(rows.size());
    std::vector<char> next_cleared(rows.size(), 0);
    std::vector<std::uint32_t> col;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cleared.empty() && cleared[j]) continue;
      col.clear();
      for (const auto& facet : facets(cols[j])) col.push_back(row_index.find(facet));
      std::sort(col.begin(), col.end());
      const std::uint32_t low = reducer.reduce_and_store(col);
      if (low != kNoPivot) {
        ++rank[static_cast<std::size_t>(q)];
        next_cleared[low] = 1;
      }
    }
    cleared.swap(next_cleared);
  }
  const auto f = k.face_counts();
  for (int q = 0; q <= max_degree; ++q) {
    const auto qs = static_cast<std::size_t>(q);
    if (q > k.dimension()) break;
    out.values[qs] = f[qs] - rank[qs] - rank[qs + 1];
  }
  return out;
}

BoundaryMatrix boundary_matrix(const FilteredComplex& f, int max_simplex_dim) {
  const IndexedFiltration idx = index_filtration(f, max_simplex_dim);
  BoundaryMatrix m;
  m.columns.reserve(idx.simplices.size());
  for (const auto* s : idx.simplices) {
    std::vector<std::uint32_t> col;
    for (const auto& facet : facets(s->vertices)) col.push_back(idx.index.find(facet));
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

std::vector<std::uint32_t> reduce(BoundaryMatrix& m) {
  std::vector<std::uint32_t> lows(m.columns.size(), kNoPivot);
  std::vector<std::uint32_t> owner(m.columns.size(), kNoPivot);
  std::vector<std::uint32_t> scratch;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    auto& col = m.columns[j];
    while (!col.empty()) {
      const std::uint32_t low = col.back();
      if (low >= owner.size()) owner.resize(std::size_t{low} + 1, kNoPivot);
      const std::uint32_t other = owner[low];
      if (other == kNoPivot) {
        owner[low] = static_cast<std::uint32_t>(j);
        lows[j] = low;
        break;
      }
      scratch.clear();
      const auto& oc = m.columns[other];
      std::set_symmetric_difference(col.begin(), col.end(), oc.begin(),
                                    oc.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
  }
  return lows;
}

PersistenceDiagram persistence(const FilteredComplex& f, int max_degree) {
  if (max_degree < 0) throw ParameterError("max_degree must be >= 0");
  const IndexedFiltration idx = index_filtration(f, max_degree + 1);
  BoundaryMatrix m;
  m.columns.reserve(idx.simplices.size());
  for (const auto* s : idx.simplices) {
    std::vector<std::uint32_t> col;
    for (const auto& facet : facets(s->vertices)) col.push_back(idx.index.find(facet));
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  const auto lows = reduce(m);

  std::vector<char> paired(lows.size(), 0);
  PersistenceDiagram d;
  for (std::size_t j = 0; j < lows.size(); ++j) {
    if (lows[j] == kNoPivot) continue;
    paired[j] = paired[lows[j]] = 1;
    const FilteredSimplex& birth = *idx.simplices[lows[j]];
    const FilteredSimplex& death = *idx.simplices[j];
    if (birth.dim() <= max_degree && death.grade > birth.grade)
      d.points.push_back({birth.dim(), birth.grade, death.grade});
  }
  for (std::size_t j = 0; j < lows.size(); ++j) {
    const FilteredSimplex& s = *idx.simplices[j];
    if (!paired[j] && s.dim() <= max_degree)
      d.points.push_back({s.dim(), s.grade, kInfinity});
  }
  finish(d);
  return d;
}

PersistenceDiagram persistence_cohomology(const FilteredComplex& f,
                                          int max_degree) {
  if (max_degree < 0) throw ParameterError("max_degree must be >= 0");
  const IndexedFiltration idx = index_filtration(f, max_degree + 1);
  const std::size_t n = idx.simplices.size();
  const auto reversed = [n](std::uint32_t i) {
    return static_cast<std::uint32_t>(n - 1 - i);
  };

  std::vector<std::vector<std::uint32_t>> by_dim(static_cast<std::size_t>(max_degree) + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const int d = idx.simplices[i]->dim();
    if (d <= max_degree) by_dim[static_cast<std::size_t>(d)].push_back(i);
  }

  PersistenceDiagram out;
  std::vector<char> cleared(n, 0);
  std::vector<std::uint32_t> col;
  for (int d = 0; d <= max_degree; ++d) {
    // Columns are coboundaries in reverse filtration order, rows are reversed
    // coface indices, so the pivot is the earliest coface.
    ColumnReducer reducer(n);
    const auto& ids = by_dim[static_cast<std::size_t>(d)];
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
      const std::uint32_t i = *it;
      if (cleared[i]) continue;
      const Simplex& s = idx.simplices[i]->vertices;
      col.clear();
      for (Vertex w = 0; w < idx.universe; ++w) {
        if (std::binary_search(s.begin(), s.end(), w)) continue;
        const std::uint32_t t = idx.index.find_with(s, w);
        if (t != SimplexIndex::kAbsent) col.push_back(reversed(t));
      }
      std::sort(col.begin(), col.end());
      const std::uint32_t low = reducer.reduce_and_store(col);
      const double birth = idx.simplices[i]->grade;
      if (low == kNoPivot) {
        out.points.push_back({d, birth, kInfinity});
        continue;
      }
      const std::uint32_t killer = reversed(low);
      cleared[killer] = 1;
      const double death = idx.simplices[killer]->grade;
      if (death > birth) out.points.push_back({d, birth, death});
    }
  }
  finish(out);
  return out;
}

std::vector<PersistencePoint> PersistenceDiagram::in_dim(int dim) const {
  std::vector<PersistencePoint> out;
  for (const auto& p : points)
    if (p.dim == dim) out.push_back(p);
  return out;
}

std::size_t diagram_snapshot_betti(const PersistenceDiagram& d, double r,
                                   int dim) {
  std::size_t c = 0;
  for (const auto& p : d.points)
    if (p.dim == dim && p.birth <= r && r < p.death) ++c;
  return c;
}

namespace {

std::string format_grade(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_grade(const std::string& tok, std::size_t line_no) {
  if (tok == "inf") return kInfinity;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size() || std::isnan(v))
    throw FormatError("diagram line " + std::to_string(line_no) +
                      ": bad number '" + tok + "'");
  return v;
}

}  // namespace

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& d) {
  PersistenceDiagram sorted = d;
  finish(sorted);
  out << "dim,birth,death\n";
  for (const auto& p : sorted.points)
    out << p.dim << ',' << format_grade(p.birth) << ',' << format_grade(p.death)
        << '\n';
}

void write_diagram_csv_file(const std::string& path,
                            const PersistenceDiagram& d) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write diagram file: " + path);
  write_diagram_csv(out, d);
}

PersistenceDiagram read_diagram_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "dim,birth,death")
    throw FormatError("diagram CSV must start with header 'dim,birth,death'");
  PersistenceDiagram d;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string tok;
    while (std::getline(row, tok, ',')) fields.push_back(tok);
    if (fields.size() != 3)
      throw FormatError("diagram line " + std::to_string(line_no) +
                        ": expected 3 fields");
    int dim = -1;
    try {
      std::size_t used = 0;
      dim = std::stoi(fields[0], &used);
      if (used != fields[0].size()) dim = -1;
    } catch (const std::exception&) {
      dim = -1;
    }
    if (dim < 0)
      throw FormatError("diagram line " + std::to_string(line_no) + ": bad dim");
    PersistencePoint p{dim, parse_grade(fields[1], line_no),
                       parse_grade(fields[2], line_no)};
    if (std::isinf(p.birth) || p.birth > p.death)
      throw FormatError("diagram line " + std::to_string(line_no) +
                        ": birth must be finite and <= death");
    d.points.push_back(p);
  }
  finish(d);
  return d;
}

PersistenceDiagram read_diagram_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open diagram file: " + path);
  return read_diagram_csv(in);
}

}  // namespace multinbr
