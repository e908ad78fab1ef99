#include "tabrw/diagrams.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tabrw {

void Column::validate() const {
  if (entries.empty()) throw std::invalid_argument("stored columns must be non-empty");
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] >= entries[i + 1])
      throw std::invalid_argument("column entries must strictly increase top to bottom");
  if (entries.front() < 1) throw std::invalid_argument("column entries must be positive");
}

int glue_position(const Column& c1, const Column& c2, GluingKind kind) {
  switch (kind) {
    case GluingKind::DiagonalSkew: return 1;
    case GluingKind::Young: return c2.size();
    case GluingKind::QuasiRibbon: return c1.size() + c2.size() - 1;
  }
  throw std::logic_error("unknown gluing kind");
}

StringOfColumns::StringOfColumns(std::vector<Column> cols, std::vector<int> glue)
    : columns(std::move(cols)), gluing(std::move(glue)) {
  for (const Column& c : columns) c.validate();
  size_t expected = columns.empty() ? 0 : columns.size() - 1;
  if (gluing.size() != expected)
    throw std::invalid_argument("gluing sequence must have (columns - 1) entries");
}

int StringOfColumns::box_count() const {
  int total = 0;
  for (const Column& c : columns) total += c.size();
  return total;
}

std::vector<int> StringOfColumns::top_rows() const {
  std::vector<int> tops;
  if (columns.empty()) return tops;
  tops.reserve(columns.size());
  tops.push_back(1);
  for (size_t k = 0; k + 1 < columns.size(); ++k) {
    // bottom of columns[k+1] sits in row tops[k] + gluing[k] - 1
    int bottom = tops[k] + gluing[k] - 1;
    tops.push_back(bottom - columns[k + 1].size() + 1);
  }
  return tops;
}

Word reading_sw(const StringOfColumns& w) {
  Word out;
  for (const Column& c : w.columns)
    for (auto it = c.entries.rbegin(); it != c.entries.rend(); ++it) out.push_back(*it);
  return out;
}

StringOfColumns embed(const Word& u, GluingKind g) {
  std::vector<Column> cols;
  for (const Word& f : fac(u)) {
    std::vector<int> entries(f.rbegin(), f.rend());
    cols.emplace_back(std::move(entries));
  }
  std::vector<int> glue;
  for (size_t k = 0; k + 1 < cols.size(); ++k)
    glue.push_back(glue_position(cols[k], cols[k + 1], g));
  return StringOfColumns(std::move(cols), std::move(glue));
}

StringOfColumns concat_g(const StringOfColumns& w1, const StringOfColumns& w2, GluingKind g) {
  if (w1.empty()) return w2;
  if (w2.empty()) return w1;
  std::vector<Column> cols = w1.columns;
  std::vector<int> glue = w1.gluing;
  glue.push_back(glue_position(cols.back(), w2.columns.front(), g));
  cols.insert(cols.end(), w2.columns.begin(), w2.columns.end());
  glue.insert(glue.end(), w2.gluing.begin(), w2.gluing.end());
  return StringOfColumns(std::move(cols), std::move(glue));
}

namespace {

// Rows shared by adjacent columns glued at p: nonempty iff 1 <= p <= |c|+|c'|-1.
bool pair_connected(const Column& c1, const Column& c2, int p) {
  return p >= 1 && p <= c1.size() + c2.size() - 1;
}

}  // namespace

ClassifyFlags classify(const StringOfColumns& w) {
  ClassifyFlags f;
  int m = w.column_count();
  if (m == 0) {
    f.row_connected = f.row_increasing = f.skew = f.diagonal_skew = true;
    f.young = f.quasi_ribbon = true;
    f.left_justified = f.right_justified = f.top_justified = f.bottom_justified = true;
    f.decreasing = f.increasing = true;
    return f;
  }

  // Row connectivity: adjacent columns share a full row and every grid row
  // is a contiguous run of boxes.
  bool connected = true;
  for (int k = 0; k + 1 < m; ++k)
    connected = connected && pair_connected(w.columns[k], w.columns[k + 1], w.gluing[k]);
  GridView grid = to_grid(w);
  std::map<int, std::vector<int>> rows;  // row -> occupied column indices (sorted)
  for (const auto& [cell, entry] : grid.cells) rows[cell.first].push_back(cell.second);
  for (auto& [row, cols] : rows)
    for (size_t i = 0; i + 1 < cols.size(); ++i)
      if (cols[i + 1] != cols[i] + 1) connected = false;
  f.row_connected = connected;

  bool increasing_rows = true;
  for (auto& [row, cols] : rows)
    for (size_t i = 0; i + 1 < cols.size(); ++i)
      if (cols[i + 1] == cols[i] + 1 &&
          *grid.entry(row, cols[i]) > *grid.entry(row, cols[i + 1]))
        increasing_rows = false;
  f.row_increasing = increasing_rows;

  bool skew = true, diag = true, young = true, qr = true;
  bool lj = true, rj = true, tj = true, bj = true, dec = true, inc = true;
  for (int k = 0; k + 1 < m; ++k) {
    int p = w.gluing[k];
    int l1 = w.columns[k].size(), l2 = w.columns[k + 1].size();
    skew = skew && p <= l2;
    diag = diag && p == 1;
    young = young && p == l2 && l2 <= l1;
    qr = qr && p == l1 + l2 - 1;
    lj = lj && l1 >= l2 && l2 <= p && p <= l1;
    rj = rj && l2 >= l1 && l1 <= p && p <= l2;
    tj = tj && p == l2;
    bj = bj && p == l1;
    if (k + 2 < m) {
      dec = dec && w.gluing[k] >= w.gluing[k + 1];
      inc = inc && w.gluing[k] <= w.gluing[k + 1];
    }
  }
  bool base = f.row_connected && f.row_increasing;
  f.skew = base && skew;
  f.diagonal_skew = f.skew && diag;
  f.young = base && young;
  f.quasi_ribbon = base && qr;
  f.left_justified = f.row_connected && lj;
  f.right_justified = f.row_connected && rj;
  f.top_justified = tj;
  f.bottom_justified = bj;
  f.decreasing = dec;
  f.increasing = inc;
  return f;
}

std::vector<int> shape(const StringOfColumns& w) {
  if (!classify(w).row_connected)
    throw std::invalid_argument("shape requires a row-connected diagram");
  GridView grid = to_grid(w);
  std::map<int, int> counts;
  for (const auto& [cell, entry] : grid.cells) ++counts[cell.first];
  std::vector<int> out;
  for (auto& [row, n] : counts) out.push_back(n);
  return out;
}

std::optional<int> GridView::entry(int row, int col) const {
  auto it = cells.find({row, col});
  if (it == cells.end()) return std::nullopt;
  return it->second;
}

GridView to_grid(const StringOfColumns& w) {
  GridView g;
  std::vector<int> tops = w.top_rows();
  bool first = true;
  for (size_t k = 0; k < w.columns.size(); ++k) {
    for (int i = 0; i < w.columns[k].size(); ++i) {
      int row = tops[k] + i;
      int col = static_cast<int>(k) + 1;
      g.cells[{row, col}] = w.columns[k].entries[static_cast<size_t>(i)];
      if (first) {
        g.min_row = g.max_row = row;
        g.min_col = g.max_col = col;
        first = false;
      } else {
        g.min_row = std::min(g.min_row, row);
        g.max_row = std::max(g.max_row, row);
        g.min_col = std::min(g.min_col, col);
        g.max_col = std::max(g.max_col, col);
      }
    }
  }
  return g;
}

StringOfColumns from_grid(const GridView& g) {
  if (g.cells.empty()) return {};
  std::map<int, std::vector<std::pair<int, int>>> cols;  // col -> (row, entry)
  for (const auto& [cell, entry] : g.cells) cols[cell.second].push_back({cell.first, entry});
  std::vector<Column> columns;
  std::vector<int> tops;
  int expected_col = cols.begin()->first;
  for (auto& [col, boxes] : cols) {
    if (col != expected_col++)
      throw std::invalid_argument("grid has a gap between occupied columns");
    std::sort(boxes.begin(), boxes.end());
    for (size_t i = 0; i + 1 < boxes.size(); ++i)
      if (boxes[i + 1].first != boxes[i].first + 1)
        throw std::invalid_argument("grid column is not a contiguous run");
    std::vector<int> entries;
    for (auto& [row, e] : boxes) entries.push_back(e);
    columns.emplace_back(std::move(entries));
    tops.push_back(boxes.front().first);
  }
  std::vector<int> glue;
  for (size_t k = 0; k + 1 < columns.size(); ++k) {
    int bottom_next = tops[k + 1] + columns[k + 1].size() - 1;
    glue.push_back(bottom_next - tops[k] + 1);
  }
  return StringOfColumns(std::move(columns), std::move(glue));
}

std::string render_ascii(const StringOfColumns& w) {
  if (w.empty()) return "";
  GridView g = to_grid(w);
  int width = 1;
  for (const auto& [cell, entry] : g.cells)
    width = std::max(width, static_cast<int>(std::to_string(entry).size()));
  std::ostringstream out;
  for (int row = g.min_row; row <= g.max_row; ++row) {
    std::string line;
    for (int col = g.min_col; col <= g.max_col; ++col) {
      std::string cell(static_cast<size_t>(width), ' ');
      if (auto e = g.entry(row, col)) {
        std::string s = std::to_string(*e);
        cell = std::string(static_cast<size_t>(width) - s.size(), ' ') + s;
      }
      line += cell;
      if (width > 1 && col < g.max_col) line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line;
    if (row < g.max_row) out << '\n';
  }
  return out.str();
}

TlMeasure tl_measure(const StringOfColumns& w) {
  TlMeasure m;
  m.columns = w.column_count();
  for (const Column& c : w.columns) m.tl.push_back(c.size());
  std::vector<int> tops = w.top_rows();
  if (!tops.empty()) {
    int top = *std::min_element(tops.begin(), tops.end());
    for (int t : tops) m.dtop.push_back(t - top);
  }
  return m;
}

RbMeasure rb_measure(const StringOfColumns& w) {
  RbMeasure m;
  m.reading = reading_sw(w);
  m.columns = w.column_count();
  for (size_t k = 0; k + 1 < w.columns.size(); ++k)
    m.dev.push_back(w.columns[k].size() + w.columns[k + 1].size() - w.gluing[k]);
  return m;
}

namespace {

template <typename T>
int cmp(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmp_lex(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = cmp(a[i], b[i])) return c;
  return cmp(a.size(), b.size());
}

// Reverse-lexicographic: decided by the last position where the tuples differ.
int cmp_revlex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return cmp(a.size(), b.size());
  for (size_t i = a.size(); i-- > 0;)
    if (int c = cmp(a[i], b[i])) return c;
  return 0;
}

}  // namespace

int compare_tl(const TlMeasure& a, const TlMeasure& b) {
  if (int c = cmp(a.columns, b.columns)) return c;
  if (int c = cmp_revlex(a.tl, b.tl)) return c;
  return cmp_lex(a.dtop, b.dtop);
}

int compare_rb(const RbMeasure& a, const RbMeasure& b) {
  if (a.reading != b.reading) return lex_less(a.reading, b.reading) ? -1 : 1;
  if (int c = cmp(a.columns, b.columns)) return c;
  // Seam deviations are compared through their distance from 1, the value a
  // quasi-ribbon seam attains; both downward (gamma) and upward (delta)
  // regluings shrink that distance.
  std::vector<long> da, db;
  for (long d : a.dev) da.push_back(d >= 1 ? d - 1 : 1 - d);
  for (long d : b.dev) db.push_back(d >= 1 ? d - 1 : 1 - d);
  for (size_t i = 0; i < std::min(da.size(), db.size()); ++i)
    if (int c = cmp(da[i], db[i])) return c;
  return cmp(da.size(), db.size());
}

std::vector<int> entry_multiset(const StringOfColumns& w) {
  std::vector<int> out;
  for (const Column& c : w.columns) out.insert(out.end(), c.entries.begin(), c.entries.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tabrw
