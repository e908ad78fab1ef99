#pragma once

#include "tabrw/rewriting.hpp"
#include "tabrw/structures.hpp"

namespace tabrw {

/// The right-bottom rectification system RBT_n: right-sliding rules alpha
/// and delta_alpha, the bottom-sliding rule gamma, the top-sliding rule
/// delta. Hypoplactic congruence tag, rb measure tag.
const RewriteSystem& rbt_rules();

/// Normal form of a Young tableau (or any top-justified embedding of a word)
/// under rbt_rules(), leftmost strategy. Throws on other inputs.
StringOfColumns rba(const StringOfColumns& t);

/// North-west rectification of a quasi-ribbon: slide every column's top box
/// to the first row, then left-justify each row. Inverse-direction witness
/// for the surjectivity of rba.
StringOfColumns nw_rectify(const StringOfColumns& q);

/// Checks rba(t |> x) == rba(t) |> x over all Young tableaux built from
/// words of length <= maxlen, plus the hypoplactic cross-section over the
/// same words.
CheckReport rba_morphism_check(int n, int maxlen);

}  // namespace tabrw
