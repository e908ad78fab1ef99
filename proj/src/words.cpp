#include "tabrw/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace tabrw {

Alphabet::Alphabet(int rank) : n(rank) {
  if (rank < 1) throw std::invalid_argument("alphabet rank must be >= 1");
}

void validate_letters(const Word& w, const Alphabet& a) {
  for (int x : w)
    if (x < 1 || x > a.n)
      throw std::domain_error("letter " + std::to_string(x) +
                              " outside alphabet [1," + std::to_string(a.n) + "]");
}

Weight weight(const Word& w, const Alphabet& a) {
  validate_letters(w, a);
  Weight counts(static_cast<size_t>(a.n), 0);
  for (int x : w) ++counts[static_cast<size_t>(x - 1)];
  return counts;
}

std::vector<Word> fac(const Word& w) {
  std::vector<Word> factors;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i + 1;
    while (j < w.size() && w[j] < w[j - 1]) ++j;
    factors.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
    i = j;
  }
  return factors;
}

Word mirror(const Word& w) {
  Word m(w.rbegin(), w.rend());
  return m;
}

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_word(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x >= 1 && x <= 9; });
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty()) throw std::invalid_argument("empty letter in word: '" + text + "'");
      w.push_back(std::stoi(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("word digits must be 1..9; use commas for larger letters");
      w.push_back(c - '0');
    }
  }
  for (int x : w)
    if (x < 1) throw std::invalid_argument("letters must be positive");
  return w;
}

std::vector<Word> all_words(int n, int length) {
  std::vector<Word> out;
  Word cur(static_cast<size_t>(length), 1);
  if (length == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n) {
      cur[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

}  // namespace tabrw
