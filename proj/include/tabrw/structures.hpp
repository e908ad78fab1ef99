#pragma once

#include <string>
#include <vector>

#include "tabrw/diagrams.hpp"

namespace tabrw {

/// The six plactic-like string data structures shipped with the library.
/// Row variants insert on the right, the others on the left.
enum class SdsId { DskRow, DskCol, YRow, YCol, QRow, QLeft };

bool is_right_structure(SdsId s);
std::string sds_name(SdsId s);

/// Carrier membership: diagonal skew tableaux for Dsk*, Young tableaux for
/// Y*, quasi-ribbon tableaux for Q*. The empty diagram belongs to all.
bool in_carrier(SdsId s, const StringOfColumns& d);

/// One-letter insertion. Right structures use insert(); left structures use
/// insert_left(). Calling the wrong side or passing a non-carrier diagram is
/// a precondition error.
StringOfColumns insert(SdsId s, const StringOfColumns& d, int x);
StringOfColumns insert_left(SdsId s, int x, const StringOfColumns& d);

/// Word insertion: right structures fold letters left to right, left
/// structures fold from the right end of the word.
StringOfColumns insert_word(SdsId s, const StringOfColumns& d, const Word& u);

/// The constructor C_S: fold the word into the empty diagram.
StringOfColumns constructor(SdsId s, const Word& u);

/// The structure-monoid product. For right structures d * d' folds the
/// reading of d' into d; for left structures it folds the reading of d into
/// d' from the right end. Both agree with the constructor on concatenated
/// readings.
StringOfColumns product(SdsId s, const StringOfColumns& d, const StringOfColumns& dp);

struct CheckReport {
  long cases = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Verifies the three string-data-structure axioms over all words of length
/// <= maxlen on the alphabet of rank n.
CheckReport check_axioms(SdsId s, int n, int maxlen);

/// Verifies y <| (d |> x) == (y <| d) |> x for all constructed d and all
/// letters x, y.
CheckReport check_commutation(SdsId right, SdsId left, int n, int maxlen);

}  // namespace tabrw
