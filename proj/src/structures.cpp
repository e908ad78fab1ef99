#include "tabrw/structures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tabrw {

bool is_right_structure(SdsId s) {
  return s == SdsId::DskRow || s == SdsId::YRow || s == SdsId::QRow;
}

std::string sds_name(SdsId s) {
  switch (s) {
    case SdsId::DskRow: return "dskrow";
    case SdsId::DskCol: return "dskcol";
    case SdsId::YRow: return "yrow";
    case SdsId::YCol: return "ycol";
    case SdsId::QRow: return "qrow";
    case SdsId::QLeft: return "qleft";
  }
  throw std::logic_error("unknown sds");
}

bool in_carrier(SdsId s, const StringOfColumns& d) {
  if (d.empty()) return true;
  ClassifyFlags f = classify(d);
  switch (s) {
    case SdsId::DskRow:
    case SdsId::DskCol: return f.diagonal_skew;
    case SdsId::YRow:
    case SdsId::YCol: return f.young;
    case SdsId::QRow:
    case SdsId::QLeft: return f.quasi_ribbon;
  }
  return false;
}

namespace {

// ---- Young tableaux as row lists -----------------------------------------

std::vector<std::vector<int>> young_rows(const StringOfColumns& d) {
  std::vector<std::vector<int>> rows;
  GridView g = to_grid(d);
  for (const auto& [cell, entry] : g.cells) {
    size_t r = static_cast<size_t>(cell.first - g.min_row);
    if (rows.size() <= r) rows.resize(r + 1);
    rows[r].push_back(entry);  // map iteration is row-major, columns ascending
  }
  return rows;
}

StringOfColumns young_from_rows(const std::vector<std::vector<int>>& rows) {
  GridView g;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      g.cells[{static_cast<int>(r) + 1, static_cast<int>(c) + 1}] = rows[r][c];
  return from_grid(g);
}

// RowInsert of Schensted's right algorithm: append when x is >= everything,
// otherwise bump the first entry strictly larger than x.
std::pair<std::vector<int>, int> row_insert(std::vector<int> row, int x) {
  auto it = std::upper_bound(row.begin(), row.end(), x);
  if (it == row.end()) {
    row.push_back(x);
    return {row, 0};
  }
  int bumped = *it;
  *it = x;
  return {row, bumped};
}

// ColumnInsert of Schensted's left algorithm: append when x is strictly
// larger than everything, otherwise bump the first entry >= x.
std::pair<std::vector<int>, int> column_insert(std::vector<int> col, int x) {
  auto it = std::lower_bound(col.begin(), col.end(), x);
  if (it == col.end()) {
    col.push_back(x);
    return {col, 0};
  }
  int bumped = *it;
  *it = x;
  return {col, bumped};
}

StringOfColumns young_insert_right(const StringOfColumns& d, int x) {
  auto rows = young_rows(d);
  int y = x;
  for (auto& row : rows) {
    auto [nr, bumped] = row_insert(row, y);
    row = nr;
    y = bumped;
    if (y == 0) break;
  }
  if (y != 0) rows.push_back({y});
  return young_from_rows(rows);
}

StringOfColumns young_insert_left(const StringOfColumns& d, int x) {
  std::vector<std::vector<int>> cols;
  for (const Column& c : d.columns) cols.push_back(c.entries);
  int y = x;
  for (auto& col : cols) {
    auto [nc, bumped] = column_insert(col, y);
    col = nc;
    y = bumped;
    if (y == 0) break;
  }
  if (y != 0) cols.push_back({y});
  std::vector<Column> columns;
  for (auto& c : cols) columns.emplace_back(std::move(c));
  std::vector<int> glue;
  for (size_t k = 0; k + 1 < columns.size(); ++k)
    glue.push_back(glue_position(columns[k], columns[k + 1], GluingKind::Young));
  return StringOfColumns(std::move(columns), std::move(glue));
}

// ---- Quasi-ribbon tableaux as row lists -----------------------------------

std::vector<std::vector<int>> qr_rows(const StringOfColumns& d) {
  std::vector<std::vector<int>> rows;
  GridView g = to_grid(d);
  for (const auto& [cell, entry] : g.cells) {
    size_t r = static_cast<size_t>(cell.first - g.min_row);
    if (rows.size() <= r) rows.resize(r + 1);
    rows[r].push_back(entry);
  }
  return rows;
}

// Rebuild a quasi-ribbon from rows: each row starts in the column holding
// the last box of the previous row.
StringOfColumns qr_from_rows(const std::vector<std::vector<int>>& raw) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : raw)
    if (!r.empty()) rows.push_back(r);
  GridView g;
  int start = 1;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c)
      g.cells[{static_cast<int>(r) + 1, start + static_cast<int>(c)}] = rows[r][c];
    start += static_cast<int>(rows[r].size()) - 1;
  }
  StringOfColumns out = from_grid(g);
  if (!out.empty() && !classify(out).quasi_ribbon)
    throw std::invalid_argument("row concatenation does not form a quasi-ribbon");
  return out;
}

StringOfColumns qr_insert_right(const StringOfColumns& d, int x) {
  auto rows = qr_rows(d);
  if (rows.empty()) return qr_from_rows({{x}});
  if (x < rows.front().front()) {
    rows.insert(rows.begin(), {x});
    return qr_from_rows(rows);
  }
  for (size_t i = rows.size(); i-- > 0;) {
    for (size_t j = rows[i].size(); j-- > 0;) {
      if (x >= rows[i][j]) {
        std::vector<int> head(rows[i].begin(), rows[i].begin() + static_cast<long>(j) + 1);
        std::vector<int> tail(rows[i].begin() + static_cast<long>(j) + 1, rows[i].end());
        head.push_back(x);
        std::vector<std::vector<int>> out(rows.begin(), rows.begin() + static_cast<long>(i));
        out.push_back(head);
        out.push_back(tail);
        out.insert(out.end(), rows.begin() + static_cast<long>(i) + 1, rows.end());
        return qr_from_rows(out);
      }
    }
  }
  throw std::logic_error("quasi-ribbon right insertion fell through");
}

StringOfColumns qr_insert_left(const StringOfColumns& d, int x) {
  auto rows = qr_rows(d);
  if (rows.empty()) return qr_from_rows({{x}});
  if (x > rows.back().back()) {
    rows.push_back({x});
    return qr_from_rows(rows);
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (x <= rows[i][j]) {
        std::vector<int> head(rows[i].begin(), rows[i].begin() + static_cast<long>(j));
        std::vector<int> tail;
        tail.push_back(x);
        tail.insert(tail.end(), rows[i].begin() + static_cast<long>(j), rows[i].end());
        std::vector<std::vector<int>> out(rows.begin(), rows.begin() + static_cast<long>(i));
        out.push_back(head);
        out.push_back(tail);
        out.insert(out.end(), rows.begin() + static_cast<long>(i) + 1, rows.end());
        return qr_from_rows(out);
      }
    }
  }
  throw std::logic_error("quasi-ribbon left insertion fell through");
}

// ---- Diagonal skew tableaux: top and bottom concatenation ------------------

StringOfColumns dsk_insert_right(const StringOfColumns& d, int x) {
  if (d.empty()) return StringOfColumns({Column{x}}, {});
  std::vector<Column> cols = d.columns;
  std::vector<int> glue = d.gluing;
  Column& last = cols.back();
  if (x >= last.entries.front()) {
    glue.push_back(1);
    cols.push_back(Column{x});
  } else {
    last.entries.insert(last.entries.begin(), x);
  }
  return StringOfColumns(std::move(cols), std::move(glue));
}

StringOfColumns dsk_insert_left(int x, const StringOfColumns& d) {
  if (d.empty()) return StringOfColumns({Column{x}}, {});
  std::vector<Column> cols = d.columns;
  std::vector<int> glue = d.gluing;
  Column& first = cols.front();
  if (x > first.entries.back()) {
    first.entries.push_back(x);
  } else {
    cols.insert(cols.begin(), Column{x});
    glue.insert(glue.begin(), 1);
  }
  return StringOfColumns(std::move(cols), std::move(glue));
}

}  // namespace

StringOfColumns insert(SdsId s, const StringOfColumns& d, int x) {
  if (!is_right_structure(s))
    throw std::invalid_argument(sds_name(s) + " is a left structure; use insert_left");
  if (!in_carrier(s, d))
    throw std::invalid_argument("diagram is not in the carrier of " + sds_name(s));
  if (x < 1) throw std::domain_error("letters must be positive");
  switch (s) {
    case SdsId::DskRow: return dsk_insert_right(d, x);
    case SdsId::YRow: return young_insert_right(d, x);
    case SdsId::QRow: return qr_insert_right(d, x);
    default: break;
  }
  throw std::logic_error("unreachable");
}

StringOfColumns insert_left(SdsId s, int x, const StringOfColumns& d) {
  if (is_right_structure(s))
    throw std::invalid_argument(sds_name(s) + " is a right structure; use insert");
  if (!in_carrier(s, d))
    throw std::invalid_argument("diagram is not in the carrier of " + sds_name(s));
  if (x < 1) throw std::domain_error("letters must be positive");
  switch (s) {
    case SdsId::DskCol: return dsk_insert_left(x, d);
    case SdsId::YCol: return young_insert_left(d, x);
    case SdsId::QLeft: return qr_insert_left(d, x);
    default: break;
  }
  throw std::logic_error("unreachable");
}

StringOfColumns insert_word(SdsId s, const StringOfColumns& d, const Word& u) {
  StringOfColumns out = d;
  if (is_right_structure(s)) {
    for (int x : u) out = insert(s, out, x);
  } else {
    for (auto it = u.rbegin(); it != u.rend(); ++it) out = insert_left(s, *it, out);
  }
  return out;
}

StringOfColumns constructor(SdsId s, const Word& u) { return insert_word(s, {}, u); }

StringOfColumns product(SdsId s, const StringOfColumns& d, const StringOfColumns& dp) {
  if (is_right_structure(s)) return insert_word(s, d, reading_sw(dp));
  return insert_word(s, dp, reading_sw(d));
}

CheckReport check_axioms(SdsId s, int n, int maxlen) {
  CheckReport rep;
  Alphabet a(n);
  // i) reading of a single inserted letter is that letter
  for (int x = 1; x <= n; ++x) {
    ++rep.cases;
    StringOfColumns d = is_right_structure(s) ? insert(s, {}, x) : insert_left(s, x, {});
    if (reading_sw(d) != Word{x})
      rep.violations.push_back("axiom i fails at letter " + std::to_string(x));
  }
  // ii) constructor(reading(d)) == d, iii) reading injective on the carrier
  std::map<Word, StringOfColumns> seen;
  for (int len = 0; len <= maxlen; ++len) {
    for (const Word& u : all_words(n, len)) {
      ++rep.cases;
      StringOfColumns d = constructor(s, u);
      if (!in_carrier(s, d))
        rep.violations.push_back("constructor left the carrier at word " + format_word(u));
      Word r = reading_sw(d);
      if (constructor(s, r) != d)
        rep.violations.push_back("axiom ii fails at word " + format_word(u));
      auto [it, inserted] = seen.try_emplace(r, d);
      if (!inserted && it->second != d)
        rep.violations.push_back("axiom iii fails: reading " + format_word(r) +
                                 " names two diagrams");
    }
  }
  if (!reading_sw(StringOfColumns{}).empty())
    rep.violations.push_back("reading of the empty diagram is not empty");
  return rep;
}

CheckReport check_commutation(SdsId right, SdsId left, int n, int maxlen) {
  CheckReport rep;
  for (int len = 0; len <= maxlen; ++len) {
    for (const Word& u : all_words(n, len)) {
      StringOfColumns d = constructor(right, u);
      for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
          ++rep.cases;
          StringOfColumns lhs = insert_left(left, y, insert(right, d, x));
          StringOfColumns rhs = insert(right, insert_left(left, y, d), x);
          if (lhs != rhs)
            rep.violations.push_back("commutation fails at word " + format_word(u) + ", x=" +
                                     std::to_string(x) + ", y=" + std::to_string(y));
        }
      }
    }
  }
  return rep;
}

}  // namespace tabrw
