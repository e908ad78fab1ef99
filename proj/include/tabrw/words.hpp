#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tabrw {

/// Rank of the totally ordered ground alphabet {1 < ... < n}.
struct Alphabet {
  int n;
  explicit Alphabet(int rank);
};

/// A word over {1..n}, stored as its letter sequence. The empty word has
/// length zero. Letters are validated against the alphabet at the entry
/// points that know the rank; the raw container itself is rank-agnostic.
using Word = std::vector<int>;

/// Occurrence counts (counts[i-1] = number of letters equal to i).
using Weight = std::vector<long>;

Weight weight(const Word& w, const Alphabet& a);

/// Splits w into its maximal strictly decreasing factors, in order.
/// Concatenating the factors gives back w; the decomposition is unique.
std::vector<Word> fac(const Word& w);

Word mirror(const Word& w);

bool lex_less(const Word& a, const Word& b);

/// Compact text form: digit string when every letter is <= 9, otherwise
/// comma-separated integers. The empty word prints as "".
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

/// Enumerates all words of the given length over {1..n} in lexicographic
/// order.
std::vector<Word> all_words(int n, int length);

void validate_letters(const Word& w, const Alphabet& a);

}  // namespace tabrw
