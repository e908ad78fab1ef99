#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabrw/structures.hpp"

namespace tabrw {

enum class CrystalFamily { Kashiwara, QuasiKashiwara };
enum class CrystalLevel { Word, Columns, ColumnsRestricted };

/// Word-level operators. The sign word replaces i by '+', i+1 by '-', other
/// letters vanish, and "-+" substrings are deleted until none remain; the
/// survivors form +^r -^l. f acts on the rightmost surviving '+', e on the
/// leftmost surviving '-'. Index i ranges over 1..n-1.
std::optional<Word> word_e(CrystalFamily fam, int i, const Word& w, const Alphabet& a);
std::optional<Word> word_f(CrystalFamily fam, int i, const Word& w, const Alphabet& a);
int word_eps(CrystalFamily fam, int i, const Word& w, const Alphabet& a);
int word_phi(CrystalFamily fam, int i, const Word& w, const Alphabet& a);

/// Column-level operators: the sign word has one symbol per column ('+' when
/// the column contains i but not i+1, '-' for the converse). The restricted
/// level additionally demands that the result stay row-connected and
/// row-increasing.
std::optional<StringOfColumns> col_e(CrystalFamily fam, CrystalLevel level, int i,
                                     const StringOfColumns& w, const Alphabet& a);
std::optional<StringOfColumns> col_f(CrystalFamily fam, CrystalLevel level, int i,
                                     const StringOfColumns& w, const Alphabet& a);
int col_eps(CrystalFamily fam, CrystalLevel level, int i, const StringOfColumns& w,
            const Alphabet& a);
int col_phi(CrystalFamily fam, CrystalLevel level, int i, const StringOfColumns& w,
            const Alphabet& a);

bool is_highest_weight_word(CrystalFamily fam, const Word& w, const Alphabet& a);
bool is_highest_weight(CrystalFamily fam, CrystalLevel level, const StringOfColumns& w,
                       const Alphabet& a);

/// Connected component of the crystal graph, built breadth-first from the
/// root: operator index ascending, f before e. Vertices are serialized when
/// needed for lookup; edges v ->(i) v' mean f_i(v) = v'.
template <typename V>
struct CrystalGraph {
  std::vector<V> vertices;
  struct Edge {
    int from;
    int label;
    int to;
  };
  std::vector<Edge> edges;
  int root = 0;
};

CrystalGraph<Word> component_word(CrystalFamily fam, const Word& w, const Alphabet& a,
                                  size_t max_vertices = 10000);
CrystalGraph<StringOfColumns> component_cols(CrystalFamily fam, CrystalLevel level,
                                             const StringOfColumns& w, const Alphabet& a,
                                             size_t max_vertices = 10000);

/// True when the map root -> root extends edge-by-edge to a weight-preserving
/// bijection between the two components; the witness pairs vertices of the
/// first component with their images.
std::optional<std::vector<std::pair<StringOfColumns, StringOfColumns>>> components_isomorphic(
    CrystalFamily fam, CrystalLevel level, const StringOfColumns& x, const StringOfColumns& y,
    const Alphabet& a, size_t max_vertices = 10000);

/// Verifies e_i(R(C(u))) = R(C(e_i(u))) and the f-analogue over all words of
/// length <= maxlen, whenever the operator is defined on u.
CheckReport crystal_commutes_with_sds(CrystalFamily fam, SdsId s, int n, int maxlen);

std::string graph_to_dot(const CrystalGraph<Word>& g);
std::string graph_to_dot(const CrystalGraph<StringOfColumns>& g, bool tooltips = true);

}  // namespace tabrw
