#include "tabrw/json_io.hpp"

#include <stdexcept>

namespace tabrw {

using nlohmann::json;

json diagram_to_json(const StringOfColumns& w, int n) {
  json cols = json::array();
  for (const Column& c : w.columns) cols.push_back(c.entries);
  return json{{"n", n}, {"columns", cols}, {"gluing", w.gluing}};
}

StringOfColumns diagram_from_json(const json& j, int* n_out) {
  if (!j.is_object() || !j.contains("n") || !j.contains("columns") || !j.contains("gluing"))
    throw std::invalid_argument("diagram JSON needs fields n, columns, gluing");
  int n = j.at("n").get<int>();
  if (n_out) *n_out = n;
  std::vector<Column> cols;
  for (const auto& c : j.at("columns")) cols.emplace_back(c.get<std::vector<int>>());
  std::vector<int> glue = j.at("gluing").get<std::vector<int>>();
  StringOfColumns w(std::move(cols), std::move(glue));
  Alphabet a(n);
  validate_letters(reading_sw(w), a);
  return w;
}

json trace_to_json(const ReductionTrace& t, int n) {
  json steps = json::array();
  steps.push_back({{"rule", "initial"}, {"index", -1}, {"diagram", diagram_to_json(t.initial, n)}});
  for (const auto& s : t.steps)
    steps.push_back({{"rule", s.rule}, {"index", s.window}, {"diagram", diagram_to_json(s.result, n)}});
  return steps;
}

ReductionTrace trace_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("trace JSON must be a non-empty list");
  ReductionTrace t;
  t.initial = diagram_from_json(j.front().at("diagram"));
  for (size_t i = 1; i < j.size(); ++i) {
    const auto& s = j[i];
    t.steps.push_back({s.at("rule").get<std::string>(), s.at("index").get<int>(),
                       diagram_from_json(s.at("diagram"))});
  }
  return t;
}

json graph_to_json(const CrystalGraph<Word>& g) {
  json vertices = json::array();
  for (const Word& v : g.vertices) vertices.push_back(format_word(v));
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"label", e.label}, {"to", e.to}});
  return json{{"vertices", vertices}, {"edges", edges}, {"root", g.root}};
}

json graph_to_json(const CrystalGraph<StringOfColumns>& g, int n) {
  json vertices = json::array();
  for (const StringOfColumns& v : g.vertices) vertices.push_back(diagram_to_json(v, n));
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"label", e.label}, {"to", e.to}});
  return json{{"vertices", vertices}, {"edges", edges}, {"root", g.root}};
}

}  // namespace tabrw
