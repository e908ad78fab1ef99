#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tabrw/words.hpp"

namespace tabrw {

/// A finite family of defining relations u = v over {1..n}. All shipped
/// relation sets preserve length and weight, so closure searches stay within
/// one finite weight class.
struct RelationSet {
  std::string name;
  int n = 1;
  std::vector<std::pair<Word, Word>> pairs;
};

/// Knuth relations: zxy = xzy for x <= y < z and yzx = yxz for x < y <= z.
RelationSet plactic_relations(int n);

/// Knuth relations plus zxty = xzyt for x <= y < z <= t and tyzx = ytxz for
/// x < y <= z < t.
RelationSet hypoplactic_relations(int n);

/// Brute-force congruence test by breadth-first closure from u, applying
/// every relation in both directions at every position. Throws
/// std::runtime_error when the frontier exceeds the cap.
bool congruent(const RelationSet& rel, const Word& u, const Word& v, long cap = 2000000);

/// Partition of all words of the given length into congruence classes.
std::vector<std::vector<Word>> classes(const RelationSet& rel, int len, long cap = 2000000);

}  // namespace tabrw
