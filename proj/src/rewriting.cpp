#include "tabrw/rewriting.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tabrw/congruence.hpp"

namespace tabrw {

std::vector<Redex> find_redexes(const RewriteSystem& sys, const StringOfColumns& w) {
  std::vector<Redex> out;
  for (int win = 0; win + 1 < w.column_count(); ++win) {
    const Column& cl = w.columns[static_cast<size_t>(win)];
    const Column& cr = w.columns[static_cast<size_t>(win) + 1];
    int g = w.gluing[static_cast<size_t>(win)];
    for (int r = 0; r < static_cast<int>(sys.rules.size()); ++r)
      if (sys.rules[static_cast<size_t>(r)].match(cl, cr, g)) out.push_back({r, win});
  }
  return out;
}

StringOfColumns apply_step(const RewriteSystem& sys, const StringOfColumns& w, const Redex& r) {
  if (r.window < 0 || r.window + 1 >= w.column_count())
    throw std::logic_error("redex window out of range");
  const Column& cl = w.columns[static_cast<size_t>(r.window)];
  const Column& cr = w.columns[static_cast<size_t>(r.window) + 1];
  int g = w.gluing[static_cast<size_t>(r.window)];
  auto rewrite = sys.rules[static_cast<size_t>(r.rule)].match(cl, cr, g);
  if (!rewrite) throw std::logic_error("redex is not applicable");

  std::vector<int> tops = w.top_rows();
  int base = tops[static_cast<size_t>(r.window)];

  std::vector<Column> cols;
  std::vector<int> abs_tops;
  for (int k = 0; k < r.window; ++k) {
    cols.push_back(w.columns[static_cast<size_t>(k)]);
    abs_tops.push_back(tops[static_cast<size_t>(k)]);
  }
  for (const WindowPart& part : rewrite->parts) {
    cols.push_back(part.col);
    abs_tops.push_back(base + part.top - 1);
  }
  for (int k = r.window + 2; k < w.column_count(); ++k) {
    cols.push_back(w.columns[static_cast<size_t>(k)]);
    abs_tops.push_back(tops[static_cast<size_t>(k)]);
  }
  std::vector<int> glue;
  for (size_t k = 0; k + 1 < cols.size(); ++k) {
    int bottom_next = abs_tops[k + 1] + cols[k + 1].size() - 1;
    glue.push_back(bottom_next - abs_tops[k] + 1);
  }
  return StringOfColumns(std::move(cols), std::move(glue));
}

NormalFormResult normal_form(const RewriteSystem& sys, const StringOfColumns& w,
                             Strategy strategy, std::uint64_t seed) {
  NormalFormResult res;
  res.diagram = w;
  res.trace.initial = w;
  long budget = 4L * w.box_count() * w.box_count() + 4;
  std::mt19937_64 rng(seed);
  for (long step = 0;; ++step) {
    std::vector<Redex> redexes = find_redexes(sys, res.diagram);
    if (redexes.empty()) return res;
    if (step >= budget)
      throw std::runtime_error("termination violation: step budget exceeded in " + sys.name);
    Redex chosen = redexes.front();
    if (strategy == Strategy::Rightmost) {
      int last = redexes.back().window;
      for (const Redex& r : redexes)
        if (r.window == last) {
          chosen = r;
          break;
        }
    } else if (strategy == Strategy::Random) {
      std::uniform_int_distribution<size_t> pick(0, redexes.size() - 1);
      chosen = redexes[pick(rng)];
    }
    res.diagram = apply_step(sys, res.diagram, chosen);
    res.trace.steps.push_back(
        {sys.rules[static_cast<size_t>(chosen.rule)].name, chosen.window, res.diagram});
  }
}

bool replay_trace(const RewriteSystem& sys, const ReductionTrace& trace) {
  StringOfColumns cur = trace.initial;
  for (const auto& step : trace.steps) {
    int rule = -1;
    for (int r = 0; r < static_cast<int>(sys.rules.size()); ++r)
      if (sys.rules[static_cast<size_t>(r)].name == step.rule) rule = r;
    if (rule < 0) return false;
    cur = apply_step(sys, cur, {rule, step.window});
    if (cur != step.result) return false;
  }
  return true;
}

JoinabilityReport check_joinability(const RewriteSystem& sys,
                                    const std::vector<StringOfColumns>& instances) {
  JoinabilityReport rep;
  for (const StringOfColumns& w : instances) {
    ++rep.instances;
    std::vector<Redex> redexes = find_redexes(sys, w);
    std::vector<StringOfColumns> normals;
    for (const Redex& r : redexes)
      normals.push_back(normal_form(sys, apply_step(sys, w, r), Strategy::Leftmost).diagram);
    for (size_t i = 0; i + 1 < normals.size(); ++i) {
      ++rep.branchings;
      if (normals[i + 1] != normals[i]) {
        rep.witnesses.push_back("non-joinable branching from reading " +
                                format_word(reading_sw(w)));
        break;
      }
    }
  }
  return rep;
}

AuditRecord audit_step(const RewriteSystem& sys, const StringOfColumns& before,
                       const StringOfColumns& after, int congruence_limit) {
  AuditRecord rec;
  rec.multiset_ok = entry_multiset(before) == entry_multiset(after);

  Word rb = reading_sw(before), ra = reading_sw(after);
  if (static_cast<int>(rb.size()) <= congruence_limit) {
    int n = 1;
    for (int x : rb) n = std::max(n, x);
    RelationSet rel = sys.congruence == CongruenceTag::Plactic ? plactic_relations(n)
                                                               : hypoplactic_relations(n);
    rec.congruence_ok = congruent(rel, rb, ra);
  } else {
    rec.congruence_ok = true;  // oracle would be too large; covered elsewhere
  }

  if (sys.measure == MeasureTag::Tl)
    rec.measure_sign = compare_tl(tl_measure(after), tl_measure(before));
  else
    rec.measure_sign = compare_rb(rb_measure(after), rb_measure(before));
  return rec;
}

}  // namespace tabrw
