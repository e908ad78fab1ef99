#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tabrw/congruence.hpp"
#include "tabrw/crystal.hpp"
#include "tabrw/jdt.hpp"
#include "tabrw/json_io.hpp"
#include "tabrw/rbt.hpp"

using namespace tabrw;
using nlohmann::json;

namespace {

struct InputOpts {
  std::string word_text;
  std::string json_text;
  std::string json_path;
  int n = 0;  // 0 = infer from the input
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  auto* w = cmd->add_option("--word", in.word_text, "input word (digits, or comma-separated)");
  auto* j = cmd->add_option("--json", in.json_text, "inline diagram JSON");
  auto* f = cmd->add_option("--json-file", in.json_path, "path to diagram JSON");
  cmd->add_option("--n", in.n, "alphabet rank (default: inferred)");
  w->excludes(j)->excludes(f);
  j->excludes(f);
}

int infer_rank(const Word& w, int requested) {
  int max_letter = 1;
  for (int x : w) max_letter = std::max(max_letter, x);
  if (requested == 0) return max_letter;
  if (requested < max_letter)
    throw std::domain_error("letter exceeds requested alphabet rank");
  return requested;
}

// Resolves the input to a diagram. Words are embedded with the given gluing.
StringOfColumns load_diagram(const InputOpts& in, GluingKind word_glue, int& n) {
  if (!in.json_path.empty() || !in.json_text.empty()) {
    json j;
    if (!in.json_path.empty()) {
      std::ifstream f(in.json_path);
      if (!f) throw std::invalid_argument("cannot open " + in.json_path);
      f >> j;
    } else {
      j = json::parse(in.json_text);
    }
    int file_n = 0;
    StringOfColumns d = diagram_from_json(j, &file_n);
    n = in.n != 0 ? in.n : file_n;
    validate_letters(reading_sw(d), Alphabet(n));
    return d;
  }
  Word w = parse_word(in.word_text);
  n = infer_rank(w, in.n);
  validate_letters(w, Alphabet(n));
  return embed(w, word_glue);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

SdsId parse_sds(const std::string& name) {
  for (SdsId s : {SdsId::DskRow, SdsId::DskCol, SdsId::YRow, SdsId::YCol, SdsId::QRow,
                  SdsId::QLeft})
    if (sds_name(s) == name) return s;
  throw CLI::ValidationError("--sds", "unknown structure " + name);
}

Strategy parse_strategy(const std::string& name) {
  if (name == "leftmost") return Strategy::Leftmost;
  if (name == "rightmost") return Strategy::Rightmost;
  if (name == "random") return Strategy::Random;
  throw CLI::ValidationError("--strategy", "unknown strategy " + name);
}

CrystalFamily parse_family(const std::string& name) {
  if (name == "k") return CrystalFamily::Kashiwara;
  if (name == "qk") return CrystalFamily::QuasiKashiwara;
  throw CLI::ValidationError("--family", "unknown family " + name);
}

CrystalLevel parse_level(const std::string& name) {
  if (name == "word") return CrystalLevel::Word;
  if (name == "columns") return CrystalLevel::Columns;
  if (name == "columns-restricted") return CrystalLevel::ColumnsRestricted;
  throw CLI::ValidationError("--level", "unknown level " + name);
}

int report_outcome(const CheckReport& rep, const std::string& suite) {
  json out{{"suite", suite}, {"cases", rep.cases}, {"violations", rep.violations}};
  std::cout << out.dump() << '\n';
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string-of-columns rewriting: tableaux, insertions, crystals"};
  app.require_subcommand(1);

  // ---- insert ----
  InputOpts insert_in;
  std::string insert_sds = "yrow", insert_format = "ascii", insert_out;
  auto* cmd_insert = app.add_subcommand("insert", "fold a word into a string data structure");
  cmd_insert->add_option("--sds", insert_sds, "dskrow|dskcol|yrow|ycol|qrow|qleft");
  cmd_insert->add_option("--word", insert_in.word_text, "input word")->required();
  cmd_insert->add_option("--n", insert_in.n, "alphabet rank (default: inferred)");
  cmd_insert->add_option("--format", insert_format, "ascii|json");
  cmd_insert->add_option("--out", insert_out, "write output to file");

  // ---- rectify / nf ----
  InputOpts rect_in;
  std::string rect_system = "fs", rect_strategy = "leftmost", rect_format = "ascii", rect_out;
  std::uint64_t rect_seed = 0;
  bool rect_trace = false;
  auto* cmd_rect = app.add_subcommand("rectify", "reduce a diagram to normal form");
  cmd_rect->alias("nf");
  cmd_rect->add_option("--system", rect_system, "fs|rbt");
  add_input_flags(cmd_rect, rect_in);
  cmd_rect->add_option("--strategy", rect_strategy, "leftmost|rightmost|random");
  cmd_rect->add_option("--seed", rect_seed, "seed for the random strategy");
  cmd_rect->add_option("--render", rect_format, "ascii|json")->description("output format");
  cmd_rect->add_option("--format", rect_format, "ascii|json");
  cmd_rect->add_flag("--trace", rect_trace, "emit the reduction trace as JSON");
  cmd_rect->add_option("--out", rect_out, "write output to file");

  // ---- render ----
  InputOpts render_in;
  std::string render_glue = "s", render_out;
  auto* cmd_render = app.add_subcommand("render", "draw a diagram as ASCII");
  add_input_flags(cmd_render, render_in);
  cmd_render->add_option("--glue", render_glue, "s|young|qr gluing for word inputs");
  cmd_render->add_option("--out", render_out, "write output to file");

  // ---- congruent ----
  std::string cong_monoid = "plactic", cong_u, cong_v;
  int cong_n = 0;
  auto* cmd_cong = app.add_subcommand("congruent", "brute-force congruence oracle");
  cmd_cong->add_option("--monoid", cong_monoid, "plactic|hypoplactic");
  cmd_cong->add_option("--u", cong_u, "first word")->required();
  cmd_cong->add_option("--v", cong_v, "second word")->required();
  cmd_cong->add_option("--n", cong_n, "alphabet rank (default: inferred)");

  // ---- crystal ----
  auto* cmd_crystal = app.add_subcommand("crystal", "crystal operators and graphs");
  cmd_crystal->require_subcommand(1);

  InputOpts cop_in;
  std::string cop_family = "k", cop_level = "word", cop_op = "f", cop_format = "ascii", cop_out;
  int cop_i = 1;
  auto* cmd_cop = cmd_crystal->add_subcommand("op", "apply one crystal operator");
  cmd_cop->add_option("--family", cop_family, "k|qk");
  cmd_cop->add_option("--level", cop_level, "word|columns|columns-restricted");
  cmd_cop->add_option("--op", cop_op, "e|f|eps|phi");
  cmd_cop->add_option("--i", cop_i, "operator index")->required();
  add_input_flags(cmd_cop, cop_in);
  cmd_cop->add_option("--format", cop_format, "ascii|json");
  cmd_cop->add_option("--out", cop_out, "write output to file");

  InputOpts cg_in;
  std::string cg_family = "k", cg_level = "word", cg_format = "dot", cg_out;
  size_t cg_max = 10000;
  auto* cmd_cg = cmd_crystal->add_subcommand("graph", "connected component of the crystal graph");
  cmd_cg->add_option("--family", cg_family, "k|qk");
  cmd_cg->add_option("--level", cg_level, "word|columns|columns-restricted");
  add_input_flags(cmd_cg, cg_in);
  cmd_cg->add_option("--format", cg_format, "dot|json");
  cmd_cg->add_option("--max-vertices", cg_max, "component size cap");
  cmd_cg->add_option("--out", cg_out, "write output to file");

  // ---- check ----
  std::string chk_suite, chk_sds = "yrow", chk_monoid = "plactic", chk_system = "fs",
              chk_family = "k", chk_pair = "y";
  int chk_n = 3, chk_maxlen = 4;
  std::uint64_t chk_seed = 1;
  auto* cmd_check = app.add_subcommand("check", "run a property suite");
  cmd_check->add_option("--suite", chk_suite,
                        "axioms|commutation|cross-section|convergence|morphism|crystal-commute")
      ->required();
  cmd_check->add_option("--n", chk_n, "alphabet rank");
  cmd_check->add_option("--maxlen", chk_maxlen, "maximum word length");
  cmd_check->add_option("--sds", chk_sds, "structure for axioms/crystal-commute");
  cmd_check->add_option("--monoid", chk_monoid, "plactic|hypoplactic for cross-section");
  cmd_check->add_option("--system", chk_system, "fs|rbt for convergence/morphism");
  cmd_check->add_option("--family", chk_family, "k|qk for crystal-commute");
  cmd_check->add_option("--pair", chk_pair, "dsk|y|q for commutation");
  cmd_check->add_option("--seed", chk_seed, "seed for randomized strategies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_insert) {
      Word w = parse_word(insert_in.word_text);
      int n = infer_rank(w, insert_in.n);
      validate_letters(w, Alphabet(n));
      StringOfColumns d = constructor(parse_sds(insert_sds), w);
      emit(insert_format == "json" ? diagram_to_json(d, n).dump() : render_ascii(d), insert_out);
      return 0;
    }

    if (*cmd_rect) {
      const RewriteSystem& sys = rect_system == "rbt" ? rbt_rules() : fs_rules();
      if (rect_system != "fs" && rect_system != "rbt")
        throw std::invalid_argument("--system must be fs or rbt");
      int n = 0;
      GluingKind glue =
          rect_system == "rbt" ? GluingKind::Young : GluingKind::DiagonalSkew;
      StringOfColumns d = load_diagram(rect_in, glue, n);
      NormalFormResult res = normal_form(sys, d, parse_strategy(rect_strategy), rect_seed);
      std::string payload;
      if (rect_trace)
        payload = trace_to_json(res.trace, n).dump();
      else if (rect_format == "json")
        payload = diagram_to_json(res.diagram, n).dump();
      else
        payload = render_ascii(res.diagram);
      emit(payload, rect_out);
      return 0;
    }

    if (*cmd_render) {
      GluingKind glue = GluingKind::DiagonalSkew;
      if (render_glue == "young") glue = GluingKind::Young;
      else if (render_glue == "qr") glue = GluingKind::QuasiRibbon;
      else if (render_glue != "s") throw std::invalid_argument("--glue must be s, young or qr");
      int n = 0;
      emit(render_ascii(load_diagram(render_in, glue, n)), render_out);
      return 0;
    }

    if (*cmd_cong) {
      Word u = parse_word(cong_u), v = parse_word(cong_v);
      int n = std::max(infer_rank(u, cong_n), infer_rank(v, cong_n));
      RelationSet rel =
          cong_monoid == "hypoplactic" ? hypoplactic_relations(n) : plactic_relations(n);
      if (cong_monoid != "plactic" && cong_monoid != "hypoplactic")
        throw std::invalid_argument("--monoid must be plactic or hypoplactic");
      std::cout << (congruent(rel, u, v) ? "true" : "false") << '\n';
      return 0;
    }

    if (*cmd_cop) {
      CrystalFamily fam = parse_family(cop_family);
      CrystalLevel level = parse_level(cop_level);
      if (level == CrystalLevel::Word) {
        Word w = parse_word(cop_in.word_text);
        Alphabet a(std::max(infer_rank(w, cop_in.n), cop_i + 1));
        if (cop_op == "eps") { std::cout << word_eps(fam, cop_i, w, a) << '\n'; return 0; }
        if (cop_op == "phi") { std::cout << word_phi(fam, cop_i, w, a) << '\n'; return 0; }
        auto res = cop_op == "e" ? word_e(fam, cop_i, w, a) : word_f(fam, cop_i, w, a);
        emit(res ? format_word(*res) : "none", cop_out);
        return 0;
      }
      int n = 0;
      StringOfColumns d = load_diagram(cop_in, GluingKind::DiagonalSkew, n);
      Alphabet a(std::max(n, cop_i + 1));
      if (cop_op == "eps") { std::cout << col_eps(fam, level, cop_i, d, a) << '\n'; return 0; }
      if (cop_op == "phi") { std::cout << col_phi(fam, level, cop_i, d, a) << '\n'; return 0; }
      auto res = cop_op == "e" ? col_e(fam, level, cop_i, d, a) : col_f(fam, level, cop_i, d, a);
      if (!res) {
        emit("none", cop_out);
      } else {
        emit(cop_format == "json" ? diagram_to_json(*res, a.n).dump() : render_ascii(*res),
             cop_out);
      }
      return 0;
    }

    if (*cmd_cg) {
      CrystalFamily fam = parse_family(cg_family);
      CrystalLevel level = parse_level(cg_level);
      if (level == CrystalLevel::Word) {
        Word w = parse_word(cg_in.word_text);
        Alphabet a(infer_rank(w, cg_in.n));
        CrystalGraph<Word> g = component_word(fam, w, a, cg_max);
        emit(cg_format == "json" ? graph_to_json(g).dump() : graph_to_dot(g), cg_out);
        return 0;
      }
      int n = 0;
      StringOfColumns d = load_diagram(cg_in, GluingKind::DiagonalSkew, n);
      Alphabet a(n);
      CrystalGraph<StringOfColumns> g = component_cols(fam, level, d, a, cg_max);
      emit(cg_format == "json" ? graph_to_json(g, a.n).dump() : graph_to_dot(g), cg_out);
      return 0;
    }

    if (*cmd_check) {
      if (chk_suite == "axioms") return report_outcome(check_axioms(parse_sds(chk_sds), chk_n, chk_maxlen), chk_suite);
      if (chk_suite == "commutation") {
        SdsId r = chk_pair == "dsk" ? SdsId::DskRow : chk_pair == "q" ? SdsId::QRow : SdsId::YRow;
        SdsId l = chk_pair == "dsk" ? SdsId::DskCol : chk_pair == "q" ? SdsId::QLeft : SdsId::YCol;
        return report_outcome(check_commutation(r, l, chk_n, chk_maxlen), chk_suite);
      }
      if (chk_suite == "cross-section") {
        CheckReport rep;
        bool hypo = chk_monoid == "hypoplactic";
        RelationSet rel = hypo ? hypoplactic_relations(chk_n) : plactic_relations(chk_n);
        SdsId s = hypo ? SdsId::QRow : SdsId::YRow;
        for (int len = 0; len <= chk_maxlen; ++len) {
          auto parts = classes(rel, len);
          std::map<Word, size_t> class_of;
          for (size_t i = 0; i < parts.size(); ++i)
            for (const Word& w : parts[i]) class_of[w] = i;
          std::map<size_t, StringOfColumns> rep_image;
          std::map<std::string, size_t> image_class;
          for (const Word& u : all_words(chk_n, len)) {
            ++rep.cases;
            StringOfColumns d = constructor(s, u);
            auto [it, fresh] = rep_image.try_emplace(class_of[u], d);
            if (!fresh && it->second != d)
              rep.violations.push_back("class of " + format_word(u) + " has two images");
            auto [jt, fresh2] = image_class.try_emplace(render_ascii(d), class_of[u]);
            if (!fresh2 && jt->second != class_of[u])
              rep.violations.push_back("image of " + format_word(u) + " has two classes");
          }
        }
        return report_outcome(rep, chk_suite);
      }
      if (chk_suite == "convergence") {
        CheckReport rep;
        bool is_rbt = chk_system == "rbt";
        const RewriteSystem& sys = is_rbt ? rbt_rules() : fs_rules();
        GluingKind glue = is_rbt ? GluingKind::Young : GluingKind::DiagonalSkew;
        for (int len = 0; len <= chk_maxlen; ++len) {
          for (const Word& u : all_words(chk_n, len)) {
            ++rep.cases;
            StringOfColumns start = is_rbt ? constructor(SdsId::YRow, u) : embed(u, glue);
            StringOfColumns lm = normal_form(sys, start, Strategy::Leftmost).diagram;
            StringOfColumns rm = normal_form(sys, start, Strategy::Rightmost).diagram;
            StringOfColumns rd = normal_form(sys, start, Strategy::Random, chk_seed).diagram;
            if (lm != rm || lm != rd)
              rep.violations.push_back("strategies disagree at " + format_word(u));
          }
        }
        return report_outcome(rep, chk_suite);
      }
      if (chk_suite == "morphism") {
        if (chk_system == "rbt") return report_outcome(rba_morphism_check(chk_n, chk_maxlen), chk_suite);
        CheckReport rep;
        for (int len = 0; len <= chk_maxlen; ++len)
          for (const Word& u : all_words(chk_n, len)) {
            StringOfColumns d = embed(u, GluingKind::DiagonalSkew);
            for (int x = 1; x <= chk_n; ++x) {
              ++rep.cases;
              if (rect(insert(SdsId::DskRow, d, x)) !=
                  insert(SdsId::YRow, rect(d), x))
                rep.violations.push_back("rect morphism fails at " + format_word(u) + " x=" +
                                         std::to_string(x));
            }
          }
        return report_outcome(rep, chk_suite);
      }
      if (chk_suite == "crystal-commute")
        return report_outcome(
            crystal_commutes_with_sds(parse_family(chk_family), parse_sds(chk_sds), chk_n,
                                      chk_maxlen),
            chk_suite);
      throw std::invalid_argument("unknown suite " + chk_suite);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
