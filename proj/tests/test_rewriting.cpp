#include <doctest.h>

#include <stdexcept>

#include "tabrw/jdt.hpp"
#include "tabrw/rbt.hpp"
#include "tabrw/rewriting.hpp"
#include "test_fixtures.hpp"

using namespace tabrw;

namespace {

int rule_index(const RewriteSystem& sys, const std::string& name) {
  for (int i = 0; i < static_cast<int>(sys.rules.size()); ++i)
    if (sys.rules[static_cast<size_t>(i)].name == name) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("Young tableaux are FS-normal, quasi-ribbons are RBT-normal") {
  CHECK(find_redexes(fs_rules(), fixtures::intro_young()).empty());
  CHECK(find_redexes(rbt_rules(), fixtures::rbt_target_qr()).empty());
  CHECK(find_redexes(fs_rules(), {}).empty());
  for (int len = 0; len <= 6; ++len)
    for (const Word& u : all_words(3, len)) {
      CHECK(find_redexes(fs_rules(), constructor(SdsId::YRow, u)).empty());
      CHECK(find_redexes(rbt_rules(), constructor(SdsId::QRow, u)).empty());
    }
}

TEST_CASE("redexes are ordered left to right") {
  StringOfColumns w = fixtures::intro_skew();
  auto redexes = find_redexes(fs_rules(), w);
  REQUIRE(!redexes.empty());
  for (size_t i = 0; i + 1 < redexes.size(); ++i)
    CHECK(redexes[i].window <= redexes[i + 1].window);
  // The section-4 example's first arrow: a gamma redex at the (c2,c3) window.
  bool gamma_at_1 = false;
  int gamma = rule_index(fs_rules(), "gamma");
  for (const Redex& r : redexes) gamma_at_1 = gamma_at_1 || (r.rule == gamma && r.window == 1);
  CHECK(gamma_at_1);
}

TEST_CASE("normal form of a normal form is itself with an empty trace") {
  NormalFormResult res = normal_form(fs_rules(), fixtures::intro_young(), Strategy::Leftmost);
  CHECK(res.diagram == fixtures::intro_young());
  CHECK(res.trace.steps.empty());
}

TEST_CASE("strategy independence on small corpora") {
  for (int len = 0; len <= 5; ++len)
    for (const Word& u : all_words(3, len)) {
      StringOfColumns start = embed(u, GluingKind::DiagonalSkew);
      StringOfColumns lm = normal_form(fs_rules(), start, Strategy::Leftmost).diagram;
      CHECK(normal_form(fs_rules(), start, Strategy::Rightmost).diagram == lm);
      for (std::uint64_t seed : {1u, 2u, 3u})
        CHECK(normal_form(fs_rules(), start, Strategy::Random, seed).diagram == lm);
    }
}

TEST_CASE("random strategy is deterministic under a fixed seed") {
  StringOfColumns start = embed(parse_word("332211"), GluingKind::DiagonalSkew);
  auto a = normal_form(fs_rules(), start, Strategy::Random, 42);
  auto b = normal_form(fs_rules(), start, Strategy::Random, 42);
  REQUIRE(a.trace.steps.size() == b.trace.steps.size());
  for (size_t i = 0; i < a.trace.steps.size(); ++i) {
    CHECK(a.trace.steps[i].rule == b.trace.steps[i].rule);
    CHECK(a.trace.steps[i].window == b.trace.steps[i].window);
  }
}

TEST_CASE("traces replay") {
  for (const Word& u : all_words(3, 5)) {
    StringOfColumns start = embed(u, GluingKind::DiagonalSkew);
    NormalFormResult res = normal_form(fs_rules(), start, Strategy::Leftmost);
    CHECK(replay_trace(fs_rules(), res.trace));
  }
}

TEST_CASE("joinability on exhaustive corpora") {
  std::vector<StringOfColumns> skews;
  for (int len = 0; len <= 6; ++len)
    for (const Word& u : all_words(3, len)) skews.push_back(embed(u, GluingKind::DiagonalSkew));
  CHECK(check_joinability(fs_rules(), skews).ok());

  std::vector<StringOfColumns> youngs;
  for (int len = 0; len <= 6; ++len)
    for (const Word& u : all_words(3, len)) youngs.push_back(constructor(SdsId::YRow, u));
  CHECK(check_joinability(rbt_rules(), youngs).ok());

  // Vacuous on a normal form.
  auto rep = check_joinability(fs_rules(), {fixtures::intro_young()});
  CHECK(rep.ok());
  CHECK(rep.branchings == 0);
}

TEST_CASE("every step is audited: multiset, congruence, strict measure descent") {
  for (int len = 0; len <= 5; ++len)
    for (const Word& u : all_words(3, len)) {
      StringOfColumns cur = embed(u, GluingKind::DiagonalSkew);
      NormalFormResult res = normal_form(fs_rules(), cur, Strategy::Leftmost);
      for (const auto& step : res.trace.steps) {
        AuditRecord rec = audit_step(fs_rules(), cur, step.result);
        CHECK(rec.multiset_ok);
        CHECK(rec.congruence_ok);
        CHECK(rec.measure_sign < 0);
        cur = step.result;
      }
    }
  for (int len = 0; len <= 5; ++len)
    for (const Word& u : all_words(3, len)) {
      StringOfColumns cur = constructor(SdsId::YRow, u);
      NormalFormResult res = normal_form(rbt_rules(), cur, Strategy::Leftmost);
      for (const auto& step : res.trace.steps) {
        AuditRecord rec = audit_step(rbt_rules(), cur, step.result);
        CHECK(rec.multiset_ok);
        CHECK(rec.congruence_ok);
        CHECK(rec.measure_sign < 0);
        cur = step.result;
      }
    }
}

TEST_CASE("applying a non-applicable redex is a logic error") {
  CHECK_THROWS_AS(apply_step(fs_rules(), fixtures::intro_young(), {0, 0}), std::logic_error);
  CHECK_THROWS_AS(apply_step(fs_rules(), fixtures::intro_young(), {0, 99}), std::logic_error);
}
