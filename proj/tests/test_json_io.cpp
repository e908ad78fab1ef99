#include <doctest.h>

#include "tabrw/json_io.hpp"
#include "tabrw/jdt.hpp"
#include "test_fixtures.hpp"

using namespace tabrw;
using nlohmann::json;

TEST_CASE("diagram JSON format is bit-exact") {
  json j = diagram_to_json(fixtures::intro_skew(), 3);
  CHECK(j.dump() == R"({"columns":[[1,3],[1,2],[1,3],[2]],"gluing":[1,1,1],"n":3})");
  CHECK(diagram_from_json(j) == fixtures::intro_skew());

  json empty = diagram_to_json({}, 4);
  CHECK(empty.dump() == R"({"columns":[],"gluing":[],"n":4})");
  CHECK(diagram_from_json(empty).empty());
}

TEST_CASE("diagram JSON validation") {
  CHECK_THROWS(diagram_from_json(json::parse(R"({"columns":[[1]]})")));
  CHECK_THROWS(diagram_from_json(json::parse(R"({"n":2,"columns":[[1,5]],"gluing":[]})")));
  CHECK_THROWS(diagram_from_json(json::parse(R"({"n":2,"columns":[[2,1]],"gluing":[]})")));
  CHECK_THROWS(diagram_from_json(json::parse(R"({"n":2,"columns":[[1],[2]],"gluing":[]})")));
}

TEST_CASE("trace JSON round-trips and replays") {
  NormalFormResult res = normal_form(fs_rules(), fixtures::intro_skew(), Strategy::Leftmost);
  json j = trace_to_json(res.trace, 3);
  ReductionTrace back = trace_from_json(j);
  CHECK(back.initial == res.trace.initial);
  REQUIRE(back.steps.size() == res.trace.steps.size());
  CHECK(replay_trace(fs_rules(), back));
}

TEST_CASE("graph JSON carries vertices and labelled edges") {
  Alphabet a(2);
  auto g = component_word(CrystalFamily::Kashiwara, parse_word("1"), a);
  json j = graph_to_json(g);
  CHECK(j.at("vertices").size() == g.vertices.size());
  CHECK(j.at("edges").size() == g.edges.size());
}
