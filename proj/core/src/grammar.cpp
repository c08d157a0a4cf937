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

#include "lambek/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lambek {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + std::size_t(std::count(text.begin(), text.begin() + std::ptrdiff_t(offset), '\n'));
}

Lexicon load_json(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source.begin(), source.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw SyntaxError(std::string("lexicon: ") + e.what(), at, line_of(source, at));
  }
  if (!doc.is_object()) throw SyntaxError("lexicon: JSON lexicon must be an object", 0, 1);
  Lexicon lex;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::vector<std::string> cats;
    if (it.value().is_string()) {
      cats.push_back(it.value().get<std::string>());
    } else if (it.value().is_array()) {
      for (const auto& c : it.value()) {
        if (!c.is_string())
          throw SyntaxError("lexicon: categories of '" + it.key() + "' must be strings", 0);
        cats.push_back(c.get<std::string>());
      }
    } else {
      throw SyntaxError("lexicon: entry '" + it.key() + "' must be a string or an array", 0);
    }
    if (cats.empty()) throw SyntaxError("lexicon: word '" + it.key() + "' has no categories", 0);
    for (const std::string& c : cats) {
      try {
        lex.add(it.key(), parse_category(c));
      } catch (const SyntaxError& e) {
        throw SyntaxError("lexicon: word '" + it.key() + "': " + e.what(), e.position());
      }
    }
  }
  return lex;
}

Lexicon load_tsv(std::string_view source) {
  Lexicon lex;
  std::size_t start = 0;
  std::size_t line = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view raw = source.substr(start, end - start);
    ++line;
    std::string_view body = trim(raw);
    if (!body.empty() && body.front() != '#') {
      std::size_t tab = raw.find('\t');
      if (tab == std::string_view::npos) {
        throw SyntaxError("lexicon line " + std::to_string(line) + ": expected word<TAB>categories",
                          start, line);
      }
      std::string word(trim(raw.substr(0, tab)));
      if (word.empty()) {
        throw SyntaxError("lexicon line " + std::to_string(line) + ": empty word", start, line);
      }
      std::size_t pos = tab + 1;
      bool any = false;
      while (pos <= raw.size()) {
        std::size_t comma = raw.find(',', pos);
        if (comma == std::string_view::npos) comma = raw.size();
        std::string_view cat = raw.substr(pos, comma - pos);
        if (!trim(cat).empty()) {
          try {
            lex.add(word, parse_category(cat));
            any = true;
          } catch (const SyntaxError& e) {
            throw SyntaxError("lexicon line " + std::to_string(line) + ": " + e.what(),
                              start + pos + e.position(), line);
          }
        } else if (comma != raw.size() || any) {
          throw SyntaxError("lexicon line " + std::to_string(line) + ": empty category",
                            start + pos, line);
        }
        pos = comma + 1;
      }
      if (!any) {
        throw SyntaxError(
            "lexicon line " + std::to_string(line) + ": no categories for '" + word + "'",
            start + tab, line);
      }
    }
    start = end + 1;
  }
  return lex;
}

}  // namespace

UnknownWordError::UnknownWordError(std::vector<std::string> words)
    : LambekError("unknown word(s): " + join(words, ", ")), words_(std::move(words)) {}

void Lexicon::add(const std::string& word, Form cat) {
  auto [it, inserted] = entries_.try_emplace(word);
  if (inserted) order_.push_back(word);
  std::vector<Form>& cats = it->second;
  if (std::find(cats.begin(), cats.end(), cat) == cats.end()) cats.push_back(cat);
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.find(std::string(word)) != entries_.end();
}

const std::vector<Form>& Lexicon::categories(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it == entries_.end()) throw UnknownWordError({std::string(word)});
  return it->second;
}

Lexicon load_lexicon(std::string_view source) {
  std::string_view body = trim(source);
  if (!body.empty() && body.front() == '{') return load_json(source);
  return load_tsv(source);
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LambekError("cannot open lexicon " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lexicon(buf.str());
}

// ---- bracketings ----

Bracketing Bracketing::leaf(std::size_t index) {
  Bracketing b;
  b.index_ = index;
  return b;
}

Bracketing Bracketing::node(Bracketing left, Bracketing right) {
  Bracketing b;
  b.kids_.push_back(std::move(left));
  b.kids_.push_back(std::move(right));
  return b;
}

std::size_t Bracketing::leaves() const {
  return is_leaf() ? 1 : left().leaves() + right().leaves();
}

std::vector<std::size_t> Bracketing::yield() const {
  if (is_leaf()) return {index_};
  std::vector<std::size_t> out = left().yield();
  std::vector<std::size_t> r = right().yield();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string Bracketing::to_string() const {
  if (is_leaf()) return std::to_string(index_);
  return "(" + left().to_string() + " " + right().to_string() + ")";
}

std::string Bracketing::to_string(const std::vector<std::string>& words) const {
  if (is_leaf()) return words.at(index_);
  return "(" + left().to_string(words) + " " + right().to_string(words) + ")";
}

Term Bracketing::to_term(const std::vector<Form>& assignment) const {
  if (is_leaf()) return Term::one(assignment.at(index_));
  return Term::comma(left().to_term(assignment), right().to_term(assignment));
}

namespace {

std::vector<Bracketing> spans(std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {Bracketing::leaf(lo)};
  std::vector<Bracketing> out;
  for (std::size_t k = lo + 1; k < hi; ++k) {
    std::vector<Bracketing> ls = spans(lo, k);
    std::vector<Bracketing> rs = spans(k, hi);
    for (const Bracketing& l : ls) {
      for (const Bracketing& r : rs) out.push_back(Bracketing::node(l, r));
    }
  }
  return out;
}

}  // namespace

std::vector<Bracketing> bracketings(std::size_t n) {
  if (n == 0) throw PreconditionError("bracketings: n must be positive");
  return spans(0, n);
}

// ---- parsing ----

std::vector<std::string> split_words(std::string_view sentence) {
  std::vector<std::string> out;
  std::istringstream in{std::string(sentence)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::vector<ParseResult> parse(const std::vector<std::string>& words, Form goal, const Lexicon& lex,
                               const ExtensionRef& ext, const SearchOptions& opts,
                               ParseStats* stats) {
  if (words.empty()) throw PreconditionError("parse: empty sentence");
  std::vector<std::string> unknown;
  for (const std::string& w : words) {
    if (!lex.contains(w) && std::find(unknown.begin(), unknown.end(), w) == unknown.end()) {
      unknown.push_back(w);
    }
  }
  if (!unknown.empty()) throw UnknownWordError(unknown);

  std::vector<const std::vector<Form>*> choices;
  for (const std::string& w : words) choices.push_back(&lex.categories(w));

  SearchOptions one = opts;
  one.max_solutions = 1;
  Prover prover(ext, one);
  std::vector<ParseResult> results;
  std::size_t examined = 0;
  for (const Bracketing& b : bracketings(words.size())) {
    // odometer over the assignments, last word fastest
    std::vector<std::size_t> pick(words.size(), 0);
    auto advance = [&] {
      for (std::size_t i = words.size(); i-- > 0;) {
        if (++pick[i] < choices[i]->size()) return true;
        pick[i] = 0;
      }
      return false;
    };
    do {
      std::vector<Form> assignment;
      for (std::size_t i = 0; i < words.size(); ++i) assignment.push_back((*choices[i])[pick[i]]);
      Term t = b.to_term(assignment);
      ++examined;
      if (std::optional<Dertree> d = prover.prove(t, goal)) {
        results.push_back({b, std::move(assignment), t, std::move(*d)});
        if (results.size() >= opts.max_solutions) {
          if (stats) stats->candidates = examined;
          return results;
        }
      }
    } while (advance());
  }
  if (stats) stats->candidates = examined;
  return results;
}

}  // namespace lambek
