// Copyright 2026 The Lambek Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lambek/bridges.hpp"
#include "lambek/grammar.hpp"
#include "lambek/render.hpp"
#include "lambek/search.hpp"
#include "lambek/serialize.hpp"

namespace lambek::cli {

namespace {

enum class LogLevel { kOff, kInfo, kDebug };

LogLevel log_level() {
  const char* v = std::getenv("LAMBEK_LOG");
  if (!v || !*v) return LogLevel::kOff;
  std::string s(v);
  if (s == "0" || s == "off") return LogLevel::kOff;
  if (s == "debug" || s == "2") return LogLevel::kDebug;
  return LogLevel::kInfo;
}

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err), level_(log_level()) {}
  void info(const std::string& msg) const {
    if (level_ >= LogLevel::kInfo) err_ << "[lambek] " << msg << "\n";
  }
  void debug(const std::string& msg) const {
    if (level_ >= LogLevel::kDebug) err_ << "[lambek:debug] " << msg << "\n";
  }

 private:
  std::ostream& err_;
  LogLevel level_;
};

// A bad flag value or input file; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input proof or translation that failed a check; exit code 1.
struct Invalid {
  CheckError error;
};

struct Options {
  std::string ext = "NL";
  std::string format = "tree";
  std::size_t max_solutions = 1;
  long long max_depth = -1;
  bool no_loop_check = false;
};

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  if (o.max_depth >= 0) s.max_depth = std::size_t(o.max_depth);
  s.max_solutions = o.max_solutions;
  s.loop_check = !o.no_loop_check;
  return s;
}

void check_format(const std::string& f) {
  if (f != "tree" && f != "json" && f != "latex") {
    throw UsageError("--format must be tree, json or latex, not '" + f + "'");
  }
}

std::string emit(const Dertree& d, const std::string& format) {
  if (format == "json") return to_json(d) + "\n";
  if (format == "latex") return render_latex(d);
  return render_tree(d);
}

std::string emit(const ArrowDocument& doc, const std::string& format) {
  if (format == "json") return to_json(doc) + "\n";
  if (format == "latex") return render_latex(doc.proof);
  return render_tree(doc.proof);
}

std::string emit(const NatDedProof& p, const std::string& format) {
  if (format == "json") return to_json(p) + "\n";
  if (format == "latex") return render_latex(p.root);
  return render_tree(p.root);
}

std::string stats_line(const SearchStats& st, double seconds) {
  std::ostringstream s;
  s << "search: expansions=" << st.expansions << " loop_prunes=" << st.loop_prunes
    << " dead_prunes=" << st.dead_prunes << " memo_hits=" << st.memo_hits
    << " saturated=" << st.saturated << " budget_exhausted=" << st.budget_exhausted
    << " time=" << seconds << "s";
  return s.str();
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- commands ----

int cmd_prove(const Options& o, const std::string& sequent, std::ostream& out, const Log& log) {
  check_format(o.format);
  ExtensionRef e = resolve_extension(o.ext);
  Sequent s = parse_sequent(e, sequent);
  Prover prover(e, search_options(o));
  SearchStats st;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Dertree> proofs = prover.prove_all(s.ante, s.succ, &st);
  log.info(stats_line(st, since(t0)));
  if (proofs.empty()) {
    out << "no proof\n";
    return kNegative;
  }
  if (o.format == "json" && proofs.size() > 1) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Dertree& d : proofs) arr.push_back(nlohmann::json::parse(to_json(d)));
    out << arr.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    if (i) out << "\n";
    out << emit(proofs[i], o.format);
  }
  return kOk;
}

int cmd_parse(const Options& o, const std::string& lexicon, const std::string& goal,
              const std::vector<std::string>& sentence, std::ostream& out, const Log& log) {
  check_format(o.format);
  ExtensionRef e = resolve_extension(o.ext);
  Lexicon lex = load_lexicon_file(lexicon);
  Form g = parse_category(goal);
  std::vector<std::string> words;
  for (const std::string& part : sentence) {
    for (std::string& w : split_words(part)) words.push_back(std::move(w));
  }
  if (words.empty()) throw UsageError("parse: empty sentence");
  ParseStats st;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<ParseResult> results = parse(words, g, lex, e, search_options(o), &st);
  log.info("parse: candidates=" + std::to_string(st.candidates) + " results=" +
           std::to_string(results.size()) + " time=" + std::to_string(since(t0)) + "s");
  if (results.empty()) {
    out << "no parse\n";
    return kNegative;
  }
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const ParseResult& r : results) {
      nlohmann::json assign = nlohmann::json::array();
      for (const Form& f : r.assignment) assign.push_back(render_category(f));
      arr.push_back({{"bracketing", r.bracketing.to_string(words)},
                     {"assignment", assign},
                     {"term", render_term(r.term)},
                     {"proof", nlohmann::json::parse(to_json(r.proof))}});
    }
    out << arr.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const ParseResult& r = results[i];
    if (i) out << "\n";
    out << r.bracketing.to_string(words) << "\n";
    for (std::size_t w = 0; w < words.size(); ++w) {
      out << "  " << words[w] << " : " << render_category(r.assignment[w]) << "\n";
    }
    out << emit(r.proof, o.format);
  }
  return kOk;
}

ProofSystem system_of(const std::string& flag, const std::string& text) {
  if (flag.empty()) return detect_system(text);
  std::optional<ProofSystem> s = parse_proof_system(flag);
  if (!s) throw UsageError("--system must be gentzen, arrow or natded, not '" + flag + "'");
  return *s;
}

int report(const Status& s, std::ostream& out) {
  if (s.ok()) {
    out << "valid\n";
    return kOk;
  }
  out << "invalid: " << s.error().describe() << "\n";
  return kNegative;
}

int cmd_check(const std::string& system, const std::string& file, std::ostream& out) {
  std::string text = read_file(file);
  switch (system_of(system, text)) {
    case ProofSystem::kGentzen: {
      Result<std::vector<RuleWitness>> r = check_proof(dertree_from_json(text));
      if (r.ok()) return report(Ok{}, out);
      return report(r.error(), out);
    }
    case ProofSystem::kArrow: {
      ArrowDocument doc = arrow_from_json(text);
      return report(check_arrow_proof(doc.ext, doc.proof), out);
    }
    case ProofSystem::kNatDed:
      return report(check_natded_proof(natded_from_json(text)), out);
  }
  return kUsage;
}

ExtensionRef guess_extension(const ArrowExtension& x) {
  for (const char* name : {"NL", "L", "NLP", "LP"}) {
    ExtensionRef e = builtin_extension(name);
    if (arrow_extends(x, to_arrow_ext(*e))) return e;
  }
  throw UsageError("no built-in extension covers arrow extension '" + x.name + "'; pass --ext");
}

ArrowDocument to_arrow(const Dertree& d) {
  Result<ArrowProof> a = gentzen_to_arrow(d);
  if (!a.ok()) throw Invalid{a.error()};
  ExtensionRef e = exten(d) ? exten(d) : nl_sequent();
  return {to_arrow_ext(*e), *a};
}

int cmd_translate(const Options& o, bool ext_given, const std::string& from, const std::string& to,
                  const std::string& file, std::ostream& out) {
  const std::string& format = o.format;
  check_format(format);
  std::optional<ProofSystem> src = parse_proof_system(from);
  std::optional<ProofSystem> dst = parse_proof_system(to);
  if (!src || !dst) throw UsageError("--from and --to take gentzen, arrow or natded");
  std::string text = read_file(file);
  try {
    switch (*src) {
      case ProofSystem::kGentzen: {
        Dertree d = dertree_from_json(text);
        if (*dst == ProofSystem::kGentzen) {
          Result<std::vector<RuleWitness>> r = check_proof(d);
          if (!r.ok()) throw Invalid{r.error()};
          out << emit(d, format);
          return kOk;
        }
        if (*dst == ProofSystem::kNatDed) {
          throw UsageError("translation from gentzen to natded is not supported");
        }
        out << emit(to_arrow(d), format);
        return kOk;
      }
      case ProofSystem::kArrow: {
        ArrowDocument doc = arrow_from_json(text);
        Status ok = check_arrow_proof(doc.ext, doc.proof);
        if (!ok.ok()) throw Invalid{ok.error()};
        if (*dst == ProofSystem::kArrow) {
          out << emit(doc, format);
          return kOk;
        }
        if (*dst == ProofSystem::kNatDed) {
          throw UsageError("translation from arrow to natded is not supported");
        }
        ExtensionRef e = ext_given ? resolve_extension(o.ext) : guess_extension(doc.ext);
        Result<Dertree> d = arrow_to_gentzen(doc.proof, e);
        if (!d.ok()) throw Invalid{d.error()};
        out << emit(*d, format);
        return kOk;
      }
      case ProofSystem::kNatDed: {
        NatDedProof p = natded_from_json(text);
        if (*dst == ProofSystem::kNatDed) {
          Status ok = check_natded_proof(p);
          if (!ok.ok()) throw Invalid{ok.error()};
          out << emit(p, format);
          return kOk;
        }
        Result<Dertree> d = natded_to_gentzen(p);
        if (!d.ok()) throw Invalid{d.error()};
        if (*dst == ProofSystem::kGentzen) {
          out << emit(*d, format);
        } else {
          out << emit(to_arrow(*d), format);
        }
        return kOk;
      }
    }
  } catch (const Invalid& failed) {
    out << "invalid: " << failed.error.describe() << "\n";
    return kNegative;
  }
  return kUsage;
}

int cmd_oracle(const Options& o, std::size_t depth, const std::string& sequent, std::ostream& out) {
  ExtensionRef e = resolve_extension(o.ext);
  Sequent s = parse_sequent(e, sequent);
  if (oracle_provable(s, depth)) {
    out << "provable\n";
    return kOk;
  }
  out << "not provable within depth " << depth << "\n";
  return kNegative;
}

int cmd_render(const std::string& format, const std::string& system, const std::string& file,
               std::ostream& out) {
  if (format != "tree" && format != "latex") {
    throw UsageError("render --format must be tree or latex, not '" + format + "'");
  }
  std::string text = read_file(file);
  switch (system_of(system, text)) {
    case ProofSystem::kGentzen:
      out << emit(dertree_from_json(text), format);
      break;
    case ProofSystem::kArrow:
      out << emit(arrow_from_json(text), format);
      break;
    case ProofSystem::kNatDed:
      out << emit(natded_from_json(text), format);
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lambek calculus prover, parser and proof checker", "lambek"};
  app.require_subcommand(1);
  Log log(err);

  Options o;
  std::string sequent;
  auto search_flags = [&](CLI::App* c) {
    c->add_option("--ext", o.ext, "Extension: NL, L, NLP, LP or @file.json");
    c->add_option("--format", o.format, "Output format: tree, json or latex");
    c->add_option("--max-solutions", o.max_solutions, "Stop after this many proofs")
        ->check(CLI::PositiveNumber);
    c->add_option("--max-depth", o.max_depth, "Bound on proof depth");
    c->add_flag("--no-loop-check", o.no_loop_check, "Disable the branch-local loop check");
  };

  CLI::App* prove = app.add_subcommand("prove", "Search for a cut-free proof of a sequent");
  search_flags(prove);
  prove->add_option("sequent", sequent, "TERM |- FORM")->required();

  std::string lexicon;
  std::string goal = "S";
  std::vector<std::string> sentence;
  CLI::App* parse_cmd = app.add_subcommand("parse", "Parse a sentence against a lexicon");
  search_flags(parse_cmd);
  parse_cmd->add_option("--lexicon", lexicon, "Lexicon file (TSV or JSON)")->required();
  parse_cmd->add_option("--goal", goal, "Goal category");
  parse_cmd->add_option("sentence", sentence, "Words")->required();

  std::string system;
  std::string file;
  CLI::App* check = app.add_subcommand("check", "Check a proof file");
  check->add_option("--system", system, "gentzen, arrow or natded (default: from the file)");
  check->add_option("file", file, "Proof JSON")->required();

  std::string from;
  std::string to;
  CLI::App* translate = app.add_subcommand("translate", "Translate a proof between systems");
  CLI::Option* ext_opt = translate->add_option("--ext", o.ext, "Target extension for arrow input");
  translate->add_option("--from", from, "Source system")->required();
  translate->add_option("--to", to, "Target system")->required();
  std::string translate_format = "json";
  translate->add_option("--format", translate_format, "Output format: json, tree or latex");
  translate->add_option("file", file, "Proof JSON")->required();

  std::size_t depth = 8;
  CLI::App* oracle = app.add_subcommand("oracle", "Decide provability within a depth bound");
  oracle->add_option("--ext", o.ext, "Extension: NL, L, NLP, LP or @file.json");
  oracle->add_option("--depth", depth, "Depth bound");
  oracle->add_option("sequent", sequent, "TERM |- FORM")->required();

  std::string render_format = "tree";
  CLI::App* render = app.add_subcommand("render", "Render a proof file");
  render->add_option("--format", render_format, "tree or latex");
  render->add_option("--system", system, "gentzen, arrow or natded (default: from the file)");
  render->add_option("file", file, "Proof JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  try {
    if (*prove) return cmd_prove(o, sequent, out, log);
    if (*parse_cmd) return cmd_parse(o, lexicon, goal, sentence, out, log);
    if (*check) return cmd_check(system, file, out);
    if (*translate) {
      o.format = translate_format;
      return cmd_translate(o, ext_opt->count() > 0, from, to, file, out);
    }
    if (*oracle) return cmd_oracle(o, depth, sequent, out);
    if (*render) return cmd_render(render_format, system, file, out);
  } catch (const UnknownWordError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what();
    if (e.line()) err << " (line " << e.line() << ")";
    err << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LambekError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lambek::cli
