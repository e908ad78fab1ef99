#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tabrw/words.hpp"

namespace tabrw {

/// A column of boxes, entries listed top to bottom, strictly increasing.
/// Stored columns are non-empty; the empty column exists only as the empty
/// string of columns.
struct Column {
  std::vector<int> entries;

  Column() = default;
  Column(std::initializer_list<int> xs) : entries(xs) { validate(); }
  explicit Column(std::vector<int> xs) : entries(std::move(xs)) { validate(); }

  int size() const { return static_cast<int>(entries.size()); }
  int at(int i) const { return entries[static_cast<size_t>(i - 1)]; }  // 1-based
  bool operator==(const Column&) const = default;
  auto operator<=>(const Column&) const = default;

  void validate() const;
};

enum class GluingKind { DiagonalSkew, Young, QuasiRibbon };

/// Gluing position assigned to a pair of adjacent columns by the named map:
/// diagonal skew gives 1, Young gives |c2|, quasi-ribbon gives |c1|+|c2|-1.
int glue_position(const Column& c1, const Column& c2, GluingKind kind);

/// A sequence of columns glued side by side. gluing[k] is the row index,
/// counted from the top box of columns[k], of the bottom box of
/// columns[k+1]. Positions may be <= 0 (the next column lies above) or
/// exceed the column length (it hangs below).
struct StringOfColumns {
  std::vector<Column> columns;
  std::vector<int> gluing;  // size == columns.size() - 1 (empty when <= 1 column)

  StringOfColumns() = default;
  StringOfColumns(std::vector<Column> cols, std::vector<int> glue);

  bool empty() const { return columns.empty(); }
  int column_count() const { return static_cast<int>(columns.size()); }
  int box_count() const;

  bool operator==(const StringOfColumns&) const = default;
  auto operator<=>(const StringOfColumns&) const = default;

  /// Absolute row of the top box of each column; the first column's top is
  /// row 1 and the rest follow from the gluing sequence.
  std::vector<int> top_rows() const;
};

Word reading_sw(const StringOfColumns& w);

/// The embedding [.]_g: factor the word into maximal decreasing runs, turn
/// each run into a column (read bottom to top) and glue with the given map.
StringOfColumns embed(const Word& u, GluingKind g);

StringOfColumns concat_g(const StringOfColumns& w1, const StringOfColumns& w2, GluingKind g);

struct ClassifyFlags {
  bool row_connected = false;
  bool row_increasing = false;
  bool skew = false;
  bool diagonal_skew = false;
  bool young = false;
  bool quasi_ribbon = false;
  bool left_justified = false;
  bool right_justified = false;
  bool top_justified = false;
  bool bottom_justified = false;
  bool decreasing = false;
  bool increasing = false;
};

ClassifyFlags classify(const StringOfColumns& w);

/// Row lengths, top to bottom. Requires a row-connected diagram.
std::vector<int> shape(const StringOfColumns& w);

/// Sparse grid of the diagram: maps (row, col) to the entry. Column indices
/// are 1-based left to right; rows use the absolute layout of top_rows().
struct GridView {
  std::map<std::pair<int, int>, int> cells;
  int min_row = 0, max_row = 0, min_col = 0, max_col = 0;

  bool occupied(int row, int col) const { return cells.count({row, col}) > 0; }
  std::optional<int> entry(int row, int col) const;
};

GridView to_grid(const StringOfColumns& w);
StringOfColumns from_grid(const GridView& g);
std::string render_ascii(const StringOfColumns& w);

/// Measure driving termination of the jeu de taquin system: column count,
/// then the column-length tuple under reverse-lexicographic comparison, then
/// the per-column top deviations lexicographically. Every FS step strictly
/// lowers this measure.
struct TlMeasure {
  int columns = 0;
  std::vector<int> tl;    // column lengths, left to right
  std::vector<int> dtop;  // gaps from each column's top box to the diagram top
};

/// Measure for the right-bottom system: south-west reading under lex order,
/// then column count, then the seam deviations |c_k|+|c_{k+1}|-p_k compared
/// through their distance from 1. Every RBT step strictly lowers it.
struct RbMeasure {
  Word reading;
  int columns = 0;
  std::vector<long> dev;
};

TlMeasure tl_measure(const StringOfColumns& w);
RbMeasure rb_measure(const StringOfColumns& w);

/// Three-way comparisons: negative when a is below b in the order.
int compare_tl(const TlMeasure& a, const TlMeasure& b);
int compare_rb(const RbMeasure& a, const RbMeasure& b);

std::vector<int> entry_multiset(const StringOfColumns& w);  // sorted entries

}  // namespace tabrw
