#include "tabrw/congruence.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace tabrw {

RelationSet plactic_relations(int n) {
  RelationSet rel{"plactic", n, {}};
  for (int x = 1; x <= n; ++x)
    for (int y = x; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z) rel.pairs.push_back({{z, x, y}, {x, z, y}});
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y; z <= n; ++z) rel.pairs.push_back({{y, z, x}, {y, x, z}});
  return rel;
}

RelationSet hypoplactic_relations(int n) {
  RelationSet rel = plactic_relations(n);
  rel.name = "hypoplactic";
  for (int x = 1; x <= n; ++x)
    for (int y = x; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z)
        for (int t = z; t <= n; ++t) rel.pairs.push_back({{z, x, t, y}, {x, z, y, t}});
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y; z <= n; ++z)
        for (int t = z + 1; t <= n; ++t) rel.pairs.push_back({{t, y, z, x}, {y, t, x, z}});
  return rel;
}

namespace {

void push_rewrites(const RelationSet& rel, const Word& w, std::set<Word>& seen,
                   std::deque<Word>& queue, long cap) {
  for (const auto& [lhs, rhs] : rel.pairs) {
    for (int dir = 0; dir < 2; ++dir) {
      const Word& from = dir == 0 ? lhs : rhs;
      const Word& to = dir == 0 ? rhs : lhs;
      if (from.size() > w.size()) continue;
      for (size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<long>(pos))) continue;
        Word next = w;
        std::copy(to.begin(), to.end(), next.begin() + static_cast<long>(pos));
        if (seen.insert(next).second) {
          if (static_cast<long>(seen.size()) > cap)
            throw std::runtime_error("congruence closure exceeded frontier cap");
          queue.push_back(std::move(next));
        }
      }
    }
  }
}

}  // namespace

bool congruent(const RelationSet& rel, const Word& u, const Word& v, long cap) {
  if (u.size() != v.size()) return false;  // all relations preserve length
  if (u == v) return true;
  Alphabet a(rel.n);
  if (weight(u, a) != weight(v, a)) return false;
  std::set<Word> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    if (w == v) return true;
    push_rewrites(rel, w, seen, queue, cap);
  }
  return seen.count(v) > 0;
}

std::vector<std::vector<Word>> classes(const RelationSet& rel, int len, long cap) {
  std::vector<std::vector<Word>> out;
  std::set<Word> assigned;
  for (const Word& u : all_words(rel.n, len)) {
    if (assigned.count(u)) continue;
    std::set<Word> seen{u};
    std::deque<Word> queue{u};
    while (!queue.empty()) {
      Word w = queue.front();
      queue.pop_front();
      push_rewrites(rel, w, seen, queue, cap);
    }
    out.emplace_back(seen.begin(), seen.end());
    assigned.insert(seen.begin(), seen.end());
  }
  return out;
}

}  // namespace tabrw
