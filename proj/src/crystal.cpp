#include "tabrw/crystal.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tabrw {

namespace {

void check_index(int i, const Alphabet& a) {
  if (i < 1 || i >= a.n)
    throw std::domain_error("crystal operator index must lie in 1..n-1");
}

// Positions of the surviving '+' and '-' symbols after deleting "-+" pairs,
// computed with a single stack scan over sign-carrying items.
struct SignSurvivors {
  std::vector<size_t> plus;   // item indices, left to right
  std::vector<size_t> minus;  // item indices, left to right
};

SignSurvivors reduce_signs(const std::vector<int>& signs) {  // +1, -1, or 0 per item
  SignSurvivors out;
  std::vector<std::pair<int, size_t>> stack;
  for (size_t idx = 0; idx < signs.size(); ++idx) {
    if (signs[idx] == 0) continue;
    if (signs[idx] > 0 && !stack.empty() && stack.back().first < 0)
      stack.pop_back();  // a '-' immediately left of '+' cancels
    else
      stack.push_back({signs[idx], idx});
  }
  for (auto& [sign, idx] : stack)
    (sign > 0 ? out.plus : out.minus).push_back(idx);
  return out;
}

std::vector<int> word_signs(const Word& w, int i) {
  std::vector<int> signs(w.size(), 0);
  for (size_t k = 0; k < w.size(); ++k)
    signs[k] = w[k] == i ? 1 : (w[k] == i + 1 ? -1 : 0);
  return signs;
}

std::vector<int> column_signs(const StringOfColumns& w, int i) {
  std::vector<int> signs;
  for (const Column& c : w.columns) {
    bool has_i = false, has_next = false;
    for (int x : c.entries) {
      has_i = has_i || x == i;
      has_next = has_next || x == i + 1;
    }
    signs.push_back(has_i && !has_next ? 1 : (has_next && !has_i ? -1 : 0));
  }
  return signs;
}

std::optional<Word> quasi_word_apply(int i, const Word& w, bool raise) {
  // Blocked when some i appears to the right of some i+1.
  std::optional<size_t> last_next;
  for (size_t k = w.size(); k-- > 0;)
    if (w[k] == i + 1) {
      last_next = k;
      break;
    }
  if (last_next)
    for (size_t k = *last_next + 1; k < w.size(); ++k)
      if (w[k] == i) return std::nullopt;
  Word out = w;
  if (raise) {  // e: leftmost i+1 -> i
    for (size_t k = 0; k < out.size(); ++k)
      if (out[k] == i + 1) {
        out[k] = i;
        return out;
      }
  } else {  // f: rightmost i -> i+1
    for (size_t k = out.size(); k-- > 0;)
      if (out[k] == i) {
        out[k] = i + 1;
        return out;
      }
  }
  return std::nullopt;
}

bool scolc_whole(const StringOfColumns& w) {
  ClassifyFlags f = classify(w);
  return f.row_connected && f.row_increasing;
}

StringOfColumns replace_in_column(const StringOfColumns& w, size_t col, int from, int to) {
  std::vector<Column> cols = w.columns;
  std::vector<int> entries = cols[col].entries;
  for (int& x : entries)
    if (x == from) x = to;
  cols[col] = Column(std::move(entries));
  return StringOfColumns(std::move(cols), w.gluing);
}

}  // namespace

std::optional<Word> word_e(CrystalFamily fam, int i, const Word& w, const Alphabet& a) {
  check_index(i, a);
  validate_letters(w, a);
  if (fam == CrystalFamily::QuasiKashiwara) return quasi_word_apply(i, w, true);
  SignSurvivors s = reduce_signs(word_signs(w, i));
  if (s.minus.empty()) return std::nullopt;
  Word out = w;
  out[s.minus.front()] = i;
  return out;
}

std::optional<Word> word_f(CrystalFamily fam, int i, const Word& w, const Alphabet& a) {
  check_index(i, a);
  validate_letters(w, a);
  if (fam == CrystalFamily::QuasiKashiwara) return quasi_word_apply(i, w, false);
  SignSurvivors s = reduce_signs(word_signs(w, i));
  if (s.plus.empty()) return std::nullopt;
  Word out = w;
  out[s.plus.back()] = i + 1;
  return out;
}

int word_eps(CrystalFamily fam, int i, const Word& w, const Alphabet& a) {
  int count = 0;
  Word cur = w;
  while (auto next = word_e(fam, i, cur, a)) {
    cur = *next;
    ++count;
  }
  return count;
}

int word_phi(CrystalFamily fam, int i, const Word& w, const Alphabet& a) {
  int count = 0;
  Word cur = w;
  while (auto next = word_f(fam, i, cur, a)) {
    cur = *next;
    ++count;
  }
  return count;
}

std::optional<StringOfColumns> col_e(CrystalFamily fam, CrystalLevel level, int i,
                                     const StringOfColumns& w, const Alphabet& a) {
  check_index(i, a);
  if (level == CrystalLevel::Word) throw std::invalid_argument("use word_e for the word level");
  std::optional<StringOfColumns> candidate;
  if (fam == CrystalFamily::Kashiwara) {
    SignSurvivors s = reduce_signs(column_signs(w, i));
    if (s.minus.empty()) return std::nullopt;
    candidate = replace_in_column(w, s.minus.front(), i + 1, i);
  } else {
    // Blocked when a column holds both letters or an i sits right of an i+1.
    std::optional<size_t> first_next;
    for (size_t c = 0; c < w.columns.size(); ++c) {
      bool has_i = false, has_next = false;
      for (int x : w.columns[c].entries) {
        has_i = has_i || x == i;
        has_next = has_next || x == i + 1;
      }
      if (has_i && has_next) return std::nullopt;
      if (has_next && !first_next) first_next = c;
      if (has_i && first_next && c > *first_next) return std::nullopt;
    }
    if (!first_next) return std::nullopt;
    candidate = replace_in_column(w, *first_next, i + 1, i);
  }
  if (level == CrystalLevel::ColumnsRestricted && !scolc_whole(*candidate)) return std::nullopt;
  return candidate;
}

std::optional<StringOfColumns> col_f(CrystalFamily fam, CrystalLevel level, int i,
                                     const StringOfColumns& w, const Alphabet& a) {
  check_index(i, a);
  if (level == CrystalLevel::Word) throw std::invalid_argument("use word_f for the word level");
  std::optional<StringOfColumns> candidate;
  if (fam == CrystalFamily::Kashiwara) {
    SignSurvivors s = reduce_signs(column_signs(w, i));
    if (s.plus.empty()) return std::nullopt;
    candidate = replace_in_column(w, s.plus.back(), i, i + 1);
  } else {
    std::optional<size_t> first_next, last_i;
    for (size_t c = 0; c < w.columns.size(); ++c) {
      bool has_i = false, has_next = false;
      for (int x : w.columns[c].entries) {
        has_i = has_i || x == i;
        has_next = has_next || x == i + 1;
      }
      if (has_i && has_next) return std::nullopt;
      if (has_next && !first_next) first_next = c;
      if (has_i) {
        if (first_next && c > *first_next) return std::nullopt;
        last_i = c;
      }
    }
    if (!last_i) return std::nullopt;
    candidate = replace_in_column(w, *last_i, i, i + 1);
  }
  if (level == CrystalLevel::ColumnsRestricted && !scolc_whole(*candidate)) return std::nullopt;
  return candidate;
}

int col_eps(CrystalFamily fam, CrystalLevel level, int i, const StringOfColumns& w,
            const Alphabet& a) {
  int count = 0;
  StringOfColumns cur = w;
  while (auto next = col_e(fam, level, i, cur, a)) {
    cur = *next;
    ++count;
  }
  return count;
}

int col_phi(CrystalFamily fam, CrystalLevel level, int i, const StringOfColumns& w,
            const Alphabet& a) {
  int count = 0;
  StringOfColumns cur = w;
  while (auto next = col_f(fam, level, i, cur, a)) {
    cur = *next;
    ++count;
  }
  return count;
}

bool is_highest_weight_word(CrystalFamily fam, const Word& w, const Alphabet& a) {
  for (int i = 1; i < a.n; ++i)
    if (word_e(fam, i, w, a)) return false;
  return true;
}

bool is_highest_weight(CrystalFamily fam, CrystalLevel level, const StringOfColumns& w,
                       const Alphabet& a) {
  for (int i = 1; i < a.n; ++i)
    if (col_e(fam, level, i, w, a)) return false;
  return true;
}

namespace {

template <typename V, typename E, typename F>
CrystalGraph<V> build_component(const V& root, int n, E&& apply_e, F&& apply_f,
                                size_t max_vertices) {
  CrystalGraph<V> g;
  std::map<V, int> index;
  std::deque<int> queue;
  g.vertices.push_back(root);
  index[root] = 0;
  queue.push_back(0);
  std::set<std::tuple<int, int, int>> edge_set;
  auto visit = [&](const V& v) -> int {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (g.vertices.size() >= max_vertices)
      throw std::runtime_error("crystal component exceeds max_vertices");
    int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back(v);
    index[v] = id;
    queue.push_back(id);
    return id;
  };
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      if (auto fv = apply_f(i, g.vertices[static_cast<size_t>(u)])) {
        int v = visit(*fv);
        if (edge_set.insert({u, i, v}).second) g.edges.push_back({u, i, v});
      }
      if (auto ev = apply_e(i, g.vertices[static_cast<size_t>(u)])) {
        int v = visit(*ev);
        if (edge_set.insert({v, i, u}).second) g.edges.push_back({v, i, u});
      }
    }
  }
  return g;
}

}  // namespace

CrystalGraph<Word> component_word(CrystalFamily fam, const Word& w, const Alphabet& a,
                                  size_t max_vertices) {
  return build_component(
      w, a.n, [&](int i, const Word& v) { return word_e(fam, i, v, a); },
      [&](int i, const Word& v) { return word_f(fam, i, v, a); }, max_vertices);
}

CrystalGraph<StringOfColumns> component_cols(CrystalFamily fam, CrystalLevel level,
                                             const StringOfColumns& w, const Alphabet& a,
                                             size_t max_vertices) {
  return build_component(
      w, a.n, [&](int i, const StringOfColumns& v) { return col_e(fam, level, i, v, a); },
      [&](int i, const StringOfColumns& v) { return col_f(fam, level, i, v, a); }, max_vertices);
}

std::optional<std::vector<std::pair<StringOfColumns, StringOfColumns>>> components_isomorphic(
    CrystalFamily fam, CrystalLevel level, const StringOfColumns& x, const StringOfColumns& y,
    const Alphabet& a, size_t max_vertices) {
  auto apply = [&](bool lower, int i, const StringOfColumns& v) {
    return lower ? col_f(fam, level, i, v, a) : col_e(fam, level, i, v, a);
  };
  std::map<StringOfColumns, StringOfColumns> fwd, bwd;
  std::deque<std::pair<StringOfColumns, StringOfColumns>> queue{{x, y}};
  fwd[x] = y;
  bwd[y] = x;
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    if (weight(reading_sw(u), a) != weight(reading_sw(v), a)) return std::nullopt;
    if (fwd.size() > max_vertices)
      throw std::runtime_error("crystal component exceeds max_vertices");
    for (int i = 1; i < a.n; ++i) {
      for (bool lower : {true, false}) {
        auto un = apply(lower, i, u);
        auto vn = apply(lower, i, v);
        if (un.has_value() != vn.has_value()) return std::nullopt;
        if (!un) continue;
        auto fit = fwd.find(*un);
        auto bit = bwd.find(*vn);
        if ((fit != fwd.end()) != (bit != bwd.end())) return std::nullopt;
        if (fit != fwd.end()) {
          if (fit->second != *vn || bit->second != *un) return std::nullopt;
          continue;
        }
        fwd[*un] = *vn;
        bwd[*vn] = *un;
        queue.push_back({*un, *vn});
      }
    }
  }
  std::vector<std::pair<StringOfColumns, StringOfColumns>> witness(fwd.begin(), fwd.end());
  return witness;
}

CheckReport crystal_commutes_with_sds(CrystalFamily fam, SdsId s, int n, int maxlen) {
  CheckReport rep;
  Alphabet a(n);
  for (int len = 0; len <= maxlen; ++len) {
    for (const Word& u : all_words(n, len)) {
      Word ru = reading_sw(constructor(s, u));
      for (int i = 1; i < n; ++i) {
        ++rep.cases;
        if (auto eu = word_e(fam, i, u, a)) {
          auto er = word_e(fam, i, ru, a);
          if (!er || *er != reading_sw(constructor(s, *eu)))
            rep.violations.push_back("e_" + std::to_string(i) + " does not commute at " +
                                     format_word(u));
        }
        if (auto fu = word_f(fam, i, u, a)) {
          auto fr = word_f(fam, i, ru, a);
          if (!fr || *fr != reading_sw(constructor(s, *fu)))
            rep.violations.push_back("f_" + std::to_string(i) + " does not commute at " +
                                     format_word(u));
        }
      }
    }
  }
  return rep;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const CrystalGraph<Word>& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v)
    out << "  v" << v << " [label=\"" << dot_escape(format_word(g.vertices[v])) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_dot(const CrystalGraph<StringOfColumns>& g, bool tooltips) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << dot_escape(format_word(reading_sw(g.vertices[v])))
        << "\"";
    if (tooltips) out << " tooltip=\"" << dot_escape(render_ascii(g.vertices[v])) << "\"";
    out << "];\n";
  }
  for (const auto& e : g.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tabrw
