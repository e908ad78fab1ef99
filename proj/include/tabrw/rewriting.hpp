#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tabrw/diagrams.hpp"

namespace tabrw {

enum class CongruenceTag { Plactic, Hypoplactic };
enum class MeasureTag { Tl, Rb };

/// One column of a rewritten window together with the row of its top box,
/// relative to the matched window's left column whose top box is row 1.
struct WindowPart {
  Column col;
  int top;
};

/// Replacement for a matched two-column window: one to three columns in
/// left-to-right order. The entry multiset must equal the window's.
struct LocalRewrite {
  std::vector<WindowPart> parts;
};

/// A named rule over a two-column window. match receives the window columns
/// and their internal gluing position and yields the replacement when the
/// rule applies. Boundary gluing positions are recomputed geometrically by
/// the engine from the parts' absolute rows, so rules never thread them.
struct Rule {
  std::string name;
  std::function<std::optional<LocalRewrite>(const Column&, const Column&, int)> match;
};

struct RewriteSystem {
  std::string name;
  std::vector<Rule> rules;
  CongruenceTag congruence;
  MeasureTag measure;
};

/// An applicable rule occurrence: rule index in the system's list and the
/// 0-based index of the window's left column.
struct Redex {
  int rule;
  int window;
  bool operator==(const Redex&) const = default;
};

struct ReductionTrace {
  StringOfColumns initial;
  struct Step {
    std::string rule;
    int window;
    StringOfColumns result;
  };
  std::vector<Step> steps;
};

enum class Strategy { Leftmost, Rightmost, Random };

/// All applicable redexes, ordered left to right by window start, ties by
/// rule-list order.
std::vector<Redex> find_redexes(const RewriteSystem& sys, const StringOfColumns& w);

/// Applies one redex. Throws std::logic_error when it is not applicable.
StringOfColumns apply_step(const RewriteSystem& sys, const StringOfColumns& w, const Redex& r);

struct NormalFormResult {
  StringOfColumns diagram;
  ReductionTrace trace;
};

/// Reduces to normal form under the chosen strategy. The step budget is
/// 4 * (box count)^2; exceeding it throws std::runtime_error, turning a
/// termination bug into a visible failure.
NormalFormResult normal_form(const RewriteSystem& sys, const StringOfColumns& w,
                             Strategy strategy, std::uint64_t seed = 0);

/// Replays a trace from its initial diagram, checking each recorded result.
bool replay_trace(const RewriteSystem& sys, const ReductionTrace& trace);

struct JoinabilityReport {
  long instances = 0;
  long branchings = 0;
  std::vector<std::string> witnesses;  // descriptions of non-joinable branchings
  bool ok() const { return witnesses.empty(); }
};

/// For every instance, reduces every pair of one-step reducts to normal form
/// and reports any pair with different results.
JoinabilityReport check_joinability(const RewriteSystem& sys,
                                    const std::vector<StringOfColumns>& instances);

struct AuditRecord {
  bool multiset_ok = false;
  bool congruence_ok = false;
  int measure_sign = 0;  // compare(after, before); a valid step gives -1
  bool ok() const { return multiset_ok && congruence_ok && measure_sign < 0; }
};

/// Audits one step: entry-multiset preservation, reading congruence under
/// the system's tag (brute-force oracle; skipped and reported as true when
/// the reading is longer than congruence_limit), and strict measure descent.
AuditRecord audit_step(const RewriteSystem& sys, const StringOfColumns& before,
                       const StringOfColumns& after, int congruence_limit = 8);

}  // namespace tabrw
