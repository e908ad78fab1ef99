#include "tabrw/jdt.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "window_common.hpp"

namespace tabrw {

using detail::concat_cols;
using detail::erase_at;
using detail::insert_at;
using detail::rows_ok;
using detail::scolc2;
using detail::slice;

namespace {

// alpha: the right column's tail hanging below the left column's bottom
// slides left, box rows unchanged. Window must be row-compatible with the
// tail strictly below: i1 < g <= i2.
std::optional<LocalRewrite> match_alpha(const Column& cl, const Column& cr, int g) {
  int i1 = cl.size(), i2 = cr.size();
  if (!(g > i1 && g <= i2 && scolc2(cl, cr, g))) return std::nullopt;
  int m = i1 + i2 - g;  // (cl bottom, cr^m) share a row
  LocalRewrite lr;
  lr.parts.push_back({concat_cols(cl, slice(cr, m + 1, i2)), 1});
  lr.parts.push_back({slice(cr, 1, m), g - i2 + 1});
  return lr;
}

// delta_alpha: fused top-justified regluing plus alpha tail transfer, for
// windows hanging below with incompatible rows.
std::optional<LocalRewrite> match_delta_alpha(const Column& cl, const Column& cr, int g) {
  int i1 = cl.size(), i2 = cr.size();
  if (!(g > i2 && !scolc2(cl, cr, g) && i1 < i2 && rows_ok(cl, cr, i2))) return std::nullopt;
  LocalRewrite lr;
  lr.parts.push_back({concat_cols(cl, slice(cr, i1 + 1, i2)), 1});
  lr.parts.push_back({slice(cr, 1, i1), 1});
  return lr;
}

// beta: bump one box of the right column into the left column at its sorted
// position; the left column's head moves up a row, the right column's part
// below the removed box moves up a row.
std::optional<LocalRewrite> match_beta(const Column& cl, const Column& cr, int g) {
  int i1 = cl.size(), i2 = cr.size();
  if (!(g >= 1 && g <= i1 && g < i2 && scolc2(cl, cr, g))) return std::nullopt;
  int lo = std::max(1, g - i2 + 2), hi = std::min(i1, g + 1);
  for (int l = lo; l <= hi; ++l) {
    int m = l - 1 + i2 - g;
    if (m < 1 || m > i2) continue;
    if ((l == 1 || cl.at(l - 1) < cr.at(m)) && cr.at(m) < cl.at(l)) {
      LocalRewrite lr;
      lr.parts.push_back({insert_at(cl, l, cr.at(m)), 0});
      lr.parts.push_back({erase_at(cr, m), g - i2 + 1});
      return lr;
    }
  }
  return std::nullopt;
}

// delta_beta: reglue the right column against the left one (highest
// placement, at most i2-1, whose shared rows are compatible) and bump one of
// its boxes into the left column. The right column may vanish.
std::optional<LocalRewrite> match_delta_beta(const Column& cl, const Column& cr, int g) {
  int i1 = cl.size(), i2 = cr.size();
  if (scolc2(cl, cr, g)) return std::nullopt;
  int p = i2 - 1;
  while (p > 0 && !rows_ok(cl, cr, p)) --p;  // p == 0 is vacuously compatible
  int lo = std::max(1, p - i2 + 2), hi = std::min(i1, p + 1);
  for (int nn = lo; nn <= hi; ++nn) {
    int t = nn - 1 + i2 - p;
    if (t < 1 || t > i2) continue;
    if ((nn == 1 || cl.at(nn - 1) < cr.at(t)) && cr.at(t) < cl.at(nn)) {
      LocalRewrite lr;
      lr.parts.push_back({insert_at(cl, nn, cr.at(t)), 0});
      if (i2 > 1) lr.parts.push_back({erase_at(cr, t), p - i2 + 1});
      return lr;
    }
  }
  return std::nullopt;
}

// gamma: slide the left column up to the highest row-compatible placement
// with the right column's bottom not above the left column's bottom (s <=
// i2).
std::optional<LocalRewrite> match_gamma(const Column& cl, const Column& cr, int g) {
  int i2 = cr.size();
  bool connected_case = scolc2(cl, cr, g) && g >= 1 && g < i2;
  bool detached_case = g <= 0 && cl.at(1) <= cr.at(i2);
  if (!connected_case && !detached_case) return std::nullopt;
  int s = 0;
  for (int cand = i2; cand >= 1; --cand)
    if (scolc2(cl, cr, cand)) {
      s = cand;
      break;
    }
  if (s == 0 || s <= g) return std::nullopt;
  LocalRewrite lr;
  lr.parts.push_back({cl, 1 - (s - g)});
  lr.parts.push_back({cr, g - i2 + 1});
  return lr;
}

// delta: slide the right column up to the top-justified position.
std::optional<LocalRewrite> match_delta(const Column& cl, const Column& cr, int g) {
  int i2 = cr.size();
  if (!(g > i2 && rows_ok(cl, cr, i2))) return std::nullopt;
  LocalRewrite lr;
  lr.parts.push_back({cl, 1});
  lr.parts.push_back({cr, 1});
  return lr;
}

}  // namespace

const RewriteSystem& fs_rules() {
  static const RewriteSystem sys{
      "fs",
      {
          {"alpha", match_alpha},
          {"delta_alpha", match_delta_alpha},
          {"beta", match_beta},
          {"delta_beta", match_delta_beta},
          {"gamma", match_gamma},
          {"delta", match_delta},
      },
      CongruenceTag::Plactic,
      MeasureTag::Tl,
  };
  return sys;
}

StringOfColumns rect(const StringOfColumns& w) {
  if (!w.empty() && !classify(w).skew)
    throw std::invalid_argument("rect expects a skew tableau");
  StringOfColumns nf = normal_form(fs_rules(), w, Strategy::Leftmost).diagram;
  return nf;
}

std::vector<InnerCorner> inner_corners(const GridView& g) {
  std::vector<InnerCorner> out;
  if (g.cells.empty()) return out;
  for (int r = g.min_row - 1; r <= g.max_row; ++r)
    for (int c = g.min_col - 1; c <= g.max_col; ++c)
      if (!g.occupied(r, c) && g.occupied(r + 1, c) && g.occupied(r, c + 1))
        out.push_back({r, c});
  return out;
}

GridView forward_slide(GridView g, InnerCorner hole) {
  auto [r, c] = hole;
  if (g.occupied(r, c)) throw std::invalid_argument("slide must start from an empty cell");
  while (true) {
    auto below = g.entry(r + 1, c);
    auto right = g.entry(r, c + 1);
    if (below && (!right || *below <= *right)) {
      g.cells[{r, c}] = *below;
      g.cells.erase({r + 1, c});
      ++r;
    } else if (right) {
      g.cells[{r, c}] = *right;
      g.cells.erase({r, c + 1});
      ++c;
    } else {
      return g;
    }
  }
}

StringOfColumns classical_rect(const StringOfColumns& w, const CornerChooser& choose) {
  GridView g = to_grid(w);
  while (true) {
    std::vector<InnerCorner> corners = inner_corners(g);
    if (corners.empty()) break;
    size_t pick = choose ? choose(corners) : 0;
    if (pick >= corners.size()) throw std::out_of_range("corner choice out of range");
    g = forward_slide(std::move(g), corners[pick]);
  }
  return from_grid(g);
}

namespace {

void collect_rect_results(const GridView& g, std::set<std::string>& visited,
                          std::vector<StringOfColumns>& out, std::set<std::string>& final_keys) {
  std::string key;
  for (const auto& [cell, e] : g.cells)
    key += std::to_string(cell.first) + "," + std::to_string(cell.second) + ":" +
           std::to_string(e) + ";";
  if (!visited.insert(key).second) return;
  std::vector<InnerCorner> corners = inner_corners(g);
  if (corners.empty()) {
    StringOfColumns d = from_grid(g);
    std::string fk = render_ascii(d);
    if (final_keys.insert(fk).second) out.push_back(d);
    return;
  }
  for (const InnerCorner& corner : corners)
    collect_rect_results(forward_slide(g, corner), visited, out, final_keys);
}

}  // namespace

std::vector<StringOfColumns> classical_rect_all_orders(const StringOfColumns& w) {
  std::set<std::string> visited, final_keys;
  std::vector<StringOfColumns> out;
  collect_rect_results(to_grid(w), visited, out, final_keys);
  return out;
}

CheckReport leftmost_is_schensted(int n, int maxlen) {
  CheckReport rep;
  for (int len = 0; len <= maxlen; ++len)
    for (const Word& u : all_words(n, len)) {
      ++rep.cases;
      StringOfColumns nf =
          normal_form(fs_rules(), embed(u, GluingKind::DiagonalSkew), Strategy::Leftmost).diagram;
      if (nf != constructor(SdsId::YRow, u))
        rep.violations.push_back("leftmost != right Schensted at " + format_word(u));
    }
  return rep;
}

CheckReport rightmost_is_left_schensted(int n, int maxlen) {
  CheckReport rep;
  for (int len = 0; len <= maxlen; ++len)
    for (const Word& u : all_words(n, len)) {
      ++rep.cases;
      StringOfColumns nf =
          normal_form(fs_rules(), embed(u, GluingKind::DiagonalSkew), Strategy::Rightmost).diagram;
      if (nf != constructor(SdsId::YCol, u))
        rep.violations.push_back("rightmost != left Schensted at " + format_word(u));
    }
  return rep;
}

std::vector<int> column_involution(const Column& c, int n) {
  std::vector<int> out;
  std::set<int> present(c.entries.begin(), c.entries.end());
  for (int x : c.entries)
    if (x > n) throw std::domain_error("column entry exceeds alphabet rank");
  for (int x = 1; x <= n; ++x)
    if (!present.count(x)) out.push_back(x);
  return out;
}

StringOfColumns diagram_involution(const StringOfColumns& w, int n) {
  std::vector<Column> cols;
  for (auto it = w.columns.rbegin(); it != w.columns.rend(); ++it) {
    std::vector<int> comp = column_involution(*it, n);
    if (!comp.empty()) cols.emplace_back(std::move(comp));
  }
  std::vector<int> glue;
  for (size_t k = 0; k + 1 < cols.size(); ++k)
    glue.push_back(glue_position(cols[k], cols[k + 1], GluingKind::Young));
  return StringOfColumns(std::move(cols), std::move(glue));
}

}  // namespace tabrw
