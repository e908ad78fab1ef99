#include <doctest.h>

#include <stdexcept>

#include <set>

#include "tabrw/congruence.hpp"
#include "tabrw/jdt.hpp"
#include "tabrw/rbt.hpp"
#include "test_fixtures.hpp"

using namespace tabrw;

namespace {

Redex named(const std::string& rule, int window) {
  const RewriteSystem& sys = rbt_rules();
  for (int i = 0; i < static_cast<int>(sys.rules.size()); ++i)
    if (sys.rules[static_cast<size_t>(i)].name == rule) return {i, window};
  REQUIRE(false);
  return {-1, -1};
}

std::set<StringOfColumns> young_corpus(int n, int max_boxes) {
  std::set<StringOfColumns> out;
  for (int len = 0; len <= max_boxes; ++len)
    for (const Word& u : all_words(n, len)) out.insert(constructor(SdsId::YRow, u));
  return out;
}

std::set<StringOfColumns> qr_corpus(int n, int max_boxes) {
  std::set<StringOfColumns> out;
  for (int len = 0; len <= max_boxes; ++len)
    for (const Word& u : all_words(n, len)) out.insert(constructor(SdsId::QRow, u));
  return out;
}

}  // namespace

TEST_CASE("the section-5 example trace, step by step") {
  StringOfColumns d = fixtures::rbt_source_young();

  d = apply_step(rbt_rules(), d, named("alpha", 0));
  CHECK(d == StringOfColumns({Column{1, 2, 3}, Column{2, 3, 4, 5}, Column{3, 4}, Column{4}},
                             {4, 2, 1}));

  d = apply_step(rbt_rules(), d, named("gamma", 0));
  CHECK(d == StringOfColumns({Column{1, 2, 3}, Column{2, 3, 4, 5}, Column{3, 4}, Column{4}},
                             {5, 1, 1}));

  d = apply_step(rbt_rules(), d, named("gamma", 1));
  CHECK(d == StringOfColumns({Column{1, 2, 3}, Column{2, 3, 4, 5}, Column{3, 4}, Column{4}},
                             {5, 3, -1}));

  d = apply_step(rbt_rules(), d, named("gamma", 2));
  CHECK(d == StringOfColumns({Column{1, 2, 3}, Column{2, 3, 4, 5}, Column{3, 4}, Column{4}},
                             {5, 3, 2}));

  d = apply_step(rbt_rules(), d, named("alpha", 1));
  CHECK(d == StringOfColumns(
                 {Column{1, 2, 3}, Column{2, 3}, Column{3, 4, 5}, Column{4}, Column{4}},
                 {3, 4, 2, 1}));

  d = apply_step(rbt_rules(), d, named("alpha", 2));
  CHECK(d == StringOfColumns(
                 {Column{1, 2, 3}, Column{2, 3}, Column{3, 4}, Column{4, 5}, Column{4}},
                 {3, 3, 3, 1}));

  d = apply_step(rbt_rules(), d, named("alpha", 3));
  CHECK(d == StringOfColumns(
                 {Column{1, 2, 3}, Column{2, 3}, Column{3, 4}, Column{4}, Column{4, 5}},
                 {3, 3, 2, 2}));

  d = apply_step(rbt_rules(), d, named("alpha", 0));
  CHECK(d == fixtures::rbt_target_qr());
}

TEST_CASE("rba of the running example") {
  StringOfColumns q = rba(fixtures::rbt_source_young());
  CHECK(q == fixtures::rbt_target_qr());
  CHECK(format_word(reading_sw(q)) == "2132343454");
}

TEST_CASE("delta reglues detached columns into the quasi-ribbon join") {
  StringOfColumns w({Column{1}, Column{2}}, {2});
  auto redexes = find_redexes(rbt_rules(), w);
  REQUIRE(!redexes.empty());
  bool found = false;
  for (const Redex& r : redexes)
    if (rbt_rules().rules[static_cast<size_t>(r.rule)].name == "delta") {
      found = true;
      CHECK(apply_step(rbt_rules(), w, r) == StringOfColumns({Column{1}, Column{2}}, {1}));
    }
  CHECK(found);
}

TEST_CASE("rba fixes quasi-ribbon-shaped inputs and rejects bad ones") {
  StringOfColumns col({Column{2, 4, 5}}, {});
  CHECK(rba(col) == col);
  CHECK(rba(StringOfColumns{}) == StringOfColumns{});
  CHECK_THROWS_AS(rba(fixtures::rbt_target_qr()), std::invalid_argument);
}

TEST_CASE("rba equals the quasi-ribbon constructor on Young tableaux") {
  for (const StringOfColumns& t : young_corpus(4, 7))
    CHECK(rba(t) == constructor(SdsId::QRow, reading_sw(t)));
}

TEST_CASE("rba also accepts Young-glued embeddings of arbitrary words") {
  for (int len = 0; len <= 5; ++len)
    for (const Word& u : all_words(3, len))
      CHECK(rba(embed(u, GluingKind::Young)) == constructor(SdsId::QRow, u));
}

TEST_CASE("every RBT step preserves the hypoplactic class") {
  RelationSet rel = hypoplactic_relations(3);
  for (int len = 0; len <= 6; ++len)
    for (const Word& u : all_words(3, len)) {
      StringOfColumns cur = constructor(SdsId::YRow, u);
      NormalFormResult res = normal_form(rbt_rules(), cur, Strategy::Leftmost);
      for (const auto& step : res.trace.steps) {
        CHECK(congruent(rel, reading_sw(cur), reading_sw(step.result)));
        cur = step.result;
      }
    }
}

TEST_CASE("strategy independence of rba") {
  for (const StringOfColumns& t : young_corpus(4, 7)) {
    StringOfColumns lm = normal_form(rbt_rules(), t, Strategy::Leftmost).diagram;
    CHECK(normal_form(rbt_rules(), t, Strategy::Rightmost).diagram == lm);
    CHECK(normal_form(rbt_rules(), t, Strategy::Random, 9).diagram == lm);
  }
}

TEST_CASE("nw_rectify undoes rba") {
  StringOfColumns row({Column{1}, Column{2}}, {1});
  CHECK(nw_rectify(row) == row);

  for (const StringOfColumns& q : qr_corpus(4, 6)) {
    if (q.empty()) continue;
    StringOfColumns t = nw_rectify(q);
    CHECK(classify(t).young);
    CHECK(t == constructor(SdsId::YRow, reading_sw(q)));
    CHECK(rba(t) == q);
  }
  CHECK_THROWS_AS(nw_rectify(fixtures::intro_young()), std::invalid_argument);
}

TEST_CASE("nw_rectify of the intro quasi-ribbon") {
  CHECK(nw_rectify(fixtures::intro_quasi_ribbon()) ==
        constructor(SdsId::YRow, parse_word("1165687689")));
}

TEST_CASE("rba is a morphism and the hypoplactic cross-section holds") {
  CHECK(rba_morphism_check(3, 5).ok());
}

TEST_CASE("hypoplactic congruent words share a quasi-ribbon") {
  // The smallest hypoplactic-but-not-plactic instance.
  CHECK(constructor(SdsId::QRow, parse_word("2121")) ==
        constructor(SdsId::QRow, parse_word("1212")));
}

TEST_CASE("composite skew -> Young -> quasi-ribbon chain") {
  RelationSet rel = hypoplactic_relations(3);
  for (int len = 0; len <= 5; ++len)
    for (const Word& u : all_words(3, len)) {
      StringOfColumns q = rba(rect(embed(u, GluingKind::DiagonalSkew)));
      CHECK(classify(q).quasi_ribbon);
      CHECK(congruent(rel, u, reading_sw(q)));
    }
}
