#pragma once

#include <algorithm>

#include "tabrw/diagrams.hpp"

namespace tabrw::detail {

// A matched window places the left column at rows 1..|cl| and the right
// column at rows g-|cr|+1..g, g being the internal gluing position.

inline bool pair_connected(const Column& cl, const Column& cr, int g) {
  return g >= 1 && g <= cl.size() + cr.size() - 1;
}

// Every full row of the pair glued at g weakly increases. Vacuously true
// when the columns share no row.
inline bool rows_ok(const Column& cl, const Column& cr, int g) {
  int lo = std::max(1, g - cr.size() + 1);
  int hi = std::min(cl.size(), g);
  for (int h = lo; h <= hi; ++h)
    if (cl.at(h) > cr.at(h - g + cr.size())) return false;
  return true;
}

inline bool scolc2(const Column& cl, const Column& cr, int g) {
  return pair_connected(cl, cr, g) && rows_ok(cl, cr, g);
}

inline Column slice(const Column& c, int from, int to) {  // 1-based inclusive
  return Column(std::vector<int>(c.entries.begin() + (from - 1), c.entries.begin() + to));
}

inline Column concat_cols(const Column& a, const Column& b) {
  std::vector<int> e = a.entries;
  e.insert(e.end(), b.entries.begin(), b.entries.end());
  return Column(std::move(e));
}

inline Column insert_at(const Column& c, int pos, int x) {  // x becomes entry #pos
  std::vector<int> e = c.entries;
  e.insert(e.begin() + (pos - 1), x);
  return Column(std::move(e));
}

inline Column erase_at(const Column& c, int pos) {
  std::vector<int> e = c.entries;
  e.erase(e.begin() + (pos - 1));
  return Column(std::move(e));
}

}  // namespace tabrw::detail
