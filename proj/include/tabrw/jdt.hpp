#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tabrw/rewriting.hpp"
#include "tabrw/structures.hpp"

namespace tabrw {

/// The jeu de taquin rewriting system FS_n: left-sliding rules alpha and
/// delta_alpha, insert-sliding rules beta and delta_beta, top-sliding rules
/// gamma and delta. Plactic congruence tag, tl measure tag.
const RewriteSystem& fs_rules();

/// Rectification: normal form of a skew tableau under fs_rules(), leftmost
/// strategy. Throws when the input is not a skew tableau.
StringOfColumns rect(const StringOfColumns& w);

/// An empty cell whose neighbours directly below and directly to the right
/// are both occupied.
using InnerCorner = std::pair<int, int>;  // (row, col)

std::vector<InnerCorner> inner_corners(const GridView& g);

/// One forward sliding: moves the hole from the given inner corner until it
/// becomes an outer corner, per the classical local moves.
GridView forward_slide(GridView g, InnerCorner hole);

/// Independent oracle: repeated forward slidings on the grid until no inner
/// corners remain. The chooser picks which inner corner to slide next.
using CornerChooser = std::function<size_t(const std::vector<InnerCorner>&)>;
StringOfColumns classical_rect(const StringOfColumns& w, const CornerChooser& choose = {});

/// All results of classical rectification over every inner-corner choice
/// order (deduplicated).
std::vector<StringOfColumns> classical_rect_all_orders(const StringOfColumns& w);

/// Checks that the leftmost normalization of [w]_s equals the right
/// Schensted constructor (and rightmost equals the left one) over all words
/// of length <= maxlen.
CheckReport leftmost_is_schensted(int n, int maxlen);
CheckReport rightmost_is_left_schensted(int n, int maxlen);

/// Schutzenberger column involution: the complement of the entry set in
/// {1..n}, listed increasingly. A full column maps to the empty sequence.
std::vector<int> column_involution(const Column& c, int n);

/// Involution on Young tableaux: reversed complemented columns, Young-glued,
/// empty complements dropped.
StringOfColumns diagram_involution(const StringOfColumns& w, int n);

}  // namespace tabrw
