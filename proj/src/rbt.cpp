#include "tabrw/rbt.hpp"

#include <stdexcept>

#include "tabrw/congruence.hpp"
#include "window_common.hpp"

namespace tabrw {

using detail::concat_cols;
using detail::rows_ok;
using detail::scolc2;
using detail::slice;

namespace {

// Split a row-compatible placement of (cl, cr) glued at g at position p: the
// left column keeps its first p boxes, its tail slides right below cr's
// first m boxes, and cr's remainder slides right into a third column. Box
// rows never change.
LocalRewrite split_window(const Column& cl, const Column& cr, int g, int p, int m) {
  int k = cl.size(), l = cr.size();
  LocalRewrite lr;
  if (p >= 1) lr.parts.push_back({slice(cl, 1, p), 1});
  lr.parts.push_back({concat_cols(slice(cr, 1, m), slice(cl, p + 1, k)), g - l + 1});
  if (m < l) lr.parts.push_back({slice(cr, m + 1, l), p + 1});
  return lr;
}

// alpha: on a row-compatible window, the left column's tail below the
// insertion point slides right.
std::optional<LocalRewrite> match_alpha(const Column& cl, const Column& cr, int g) {
  int k = cl.size(), l = cr.size();
  if (!scolc2(cl, cr, g)) return std::nullopt;
  int lo = std::max(0, g - l + 1), hi = std::min(k - 1, g);
  for (int p = lo; p <= hi; ++p) {
    int m = p + l - g;
    if (m < 1 || m > l) continue;
    if ((p == 0 || cl.at(p) <= cr.at(m)) && cr.at(m) < cl.at(p + 1))
      return split_window(cl, cr, g, p, m);
  }
  return std::nullopt;
}

// delta_alpha: reglue the right column to the highest row-compatible
// connected placement (or just above the left column when none exists), then
// split as alpha does.
std::optional<LocalRewrite> match_delta_alpha(const Column& cl, const Column& cr, int g) {
  int k = cl.size(), l = cr.size();
  if (scolc2(cl, cr, g)) return std::nullopt;
  int gl = 0;
  for (int cand = 1; cand <= k + l - 1; ++cand)
    if (rows_ok(cl, cr, cand)) {
      gl = cand;
      break;
    }
  int lo = std::max(0, gl - l + 1), hi = std::min(k - 1, gl);
  for (int p = lo; p <= hi; ++p) {
    int m = p + l - gl;
    if (m < 1 || m > l) continue;
    if ((p == 0 || cl.at(p) <= cr.at(m)) && cr.at(m) < cl.at(p + 1))
      return split_window(cl, cr, gl, p, m);
  }
  return std::nullopt;
}

// gamma: slide the right column down to the lowest row-compatible connected
// placement.
std::optional<LocalRewrite> match_gamma(const Column& cl, const Column& cr, int g) {
  int k = cl.size(), l = cr.size();
  bool connected_case = g >= 1 && scolc2(cl, cr, g);
  bool detached_case = g < 1 && cl.at(1) <= cr.at(l);
  if (!connected_case && !detached_case) return std::nullopt;
  int target = 0;
  for (int cand = k + l - 1; cand >= 1; --cand)
    if (rows_ok(cl, cr, cand)) {
      target = cand;
      break;
    }
  if (target == 0 || target <= g) return std::nullopt;
  LocalRewrite lr;
  lr.parts.push_back({cl, 1});
  lr.parts.push_back({cr, target - l + 1});
  return lr;
}

// delta: a right column detached below slides up against the left column's
// bottom row.
std::optional<LocalRewrite> match_delta(const Column& cl, const Column& cr, int g) {
  int k = cl.size(), l = cr.size();
  if (!(g >= k + l && cl.at(k) <= cr.at(1))) return std::nullopt;
  LocalRewrite lr;
  lr.parts.push_back({cl, 1});
  lr.parts.push_back({cr, k});  // bottom lands at row k + l - 1
  return lr;
}

}  // namespace

const RewriteSystem& rbt_rules() {
  static const RewriteSystem sys{
      "rbt",
      {
          {"alpha", match_alpha},
          {"delta_alpha", match_delta_alpha},
          {"gamma", match_gamma},
          {"delta", match_delta},
      },
      CongruenceTag::Hypoplactic,
      MeasureTag::Rb,
  };
  return sys;
}

StringOfColumns rba(const StringOfColumns& t) {
  if (!t.empty()) {
    ClassifyFlags f = classify(t);
    bool young_embedded = embed(reading_sw(t), GluingKind::Young) == t;
    if (!f.young && !young_embedded)
      throw std::invalid_argument("rba expects a Young tableau or a Young-glued word embedding");
  }
  return normal_form(rbt_rules(), t, Strategy::Leftmost).diagram;
}

StringOfColumns nw_rectify(const StringOfColumns& q) {
  if (!q.empty() && !classify(q).quasi_ribbon)
    throw std::invalid_argument("nw_rectify expects a quasi-ribbon tableau");
  if (q.empty()) return q;
  // Slide each column's top box to the first row.
  GridView topped;
  for (int c = 0; c < q.column_count(); ++c)
    for (int i = 0; i < q.columns[static_cast<size_t>(c)].size(); ++i)
      topped.cells[{1 + i, c + 1}] = q.columns[static_cast<size_t>(c)].entries[static_cast<size_t>(i)];
  // Left-justify every row.
  std::map<int, std::vector<int>> rows;
  for (const auto& [cell, e] : topped.cells) rows[cell.first].push_back(e);
  GridView packed;
  for (auto& [row, entries] : rows)
    for (size_t c = 0; c < entries.size(); ++c)
      packed.cells[{row, static_cast<int>(c) + 1}] = entries[c];
  StringOfColumns out = from_grid(packed);
  if (!classify(out).young)
    throw std::logic_error("north-west rectification did not produce a Young tableau");
  return out;
}

CheckReport rba_morphism_check(int n, int maxlen) {
  CheckReport rep;
  RelationSet rel = hypoplactic_relations(n);
  std::map<Word, StringOfColumns> image;  // reading of C_Y(u) -> rba image
  for (int len = 0; len <= maxlen; ++len) {
    for (const Word& u : all_words(n, len)) {
      StringOfColumns t = constructor(SdsId::YRow, u);
      StringOfColumns q = rba(t);
      for (int x = 1; x <= n; ++x) {
        ++rep.cases;
        if (rba(insert(SdsId::YRow, t, x)) != insert(SdsId::QRow, q, x))
          rep.violations.push_back("morphism fails at " + format_word(u) + " with x=" +
                                   std::to_string(x));
      }
    }
  }
  // Hypoplactic cross-section: same class iff same Q_row constructor.
  for (int len = 0; len <= maxlen; ++len) {
    auto parts = classes(rel, len);
    std::map<Word, size_t> class_of;
    for (size_t i = 0; i < parts.size(); ++i)
      for (const Word& w : parts[i]) class_of[w] = i;
    std::map<std::string, size_t> image_class;
    for (const Word& u : all_words(n, len)) {
      ++rep.cases;
      std::string key = render_ascii(constructor(SdsId::QRow, u));
      auto [it, inserted] = image_class.try_emplace(key, class_of[u]);
      if (!inserted && it->second != class_of[u])
        rep.violations.push_back("cross-section fails: same tableau, different classes at " +
                                 format_word(u));
    }
    std::map<size_t, std::string> class_image;
    for (const Word& u : all_words(n, len)) {
      std::string key = render_ascii(constructor(SdsId::QRow, u));
      auto [it, inserted] = class_image.try_emplace(class_of[u], key);
      if (!inserted && it->second != key)
        rep.violations.push_back("cross-section fails: same class, different tableaux at " +
                                 format_word(u));
    }
  }
  return rep;
}

}  // namespace tabrw
