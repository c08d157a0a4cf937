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

#ifndef LAMBEK_GRAMMAR_HPP_
#define LAMBEK_GRAMMAR_HPP_

// Lexicon-driven parsing: every bracketing of the sentence times every
// lexical assignment is a candidate sequent, certified by prove.

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lambek/dertree.hpp"
#include "lambek/search.hpp"

namespace lambek {

class UnknownWordError : public LambekError {
 public:
  explicit UnknownWordError(std::vector<std::string> words);
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::vector<std::string> words_;
};

class Lexicon {
 public:
  // Appends `cat` to the word's categories unless already present.
  void add(const std::string& word, Form cat);

  bool contains(std::string_view word) const;
  // Throws UnknownWordError.
  const std::vector<Form>& categories(std::string_view word) const;
  // Words in first-insertion order.
  const std::vector<std::string>& words() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

 private:
  std::unordered_map<std::string, std::vector<Form>> entries_;
  std::vector<std::string> order_;
};

// Either `word<TAB>cat[,cat...]` lines with `#` comments, or a JSON
// object {"word": ["cat", ...]}. Throws SyntaxError carrying the line.
Lexicon load_lexicon(std::string_view source);
Lexicon load_lexicon_file(const std::string& path);

// A binary tree over word indices.
class Bracketing {
 public:
  static Bracketing leaf(std::size_t index);
  static Bracketing node(Bracketing left, Bracketing right);

  bool is_leaf() const { return kids_.empty(); }
  std::size_t index() const { return index_; }
  const Bracketing& left() const { return kids_.at(0); }
  const Bracketing& right() const { return kids_.at(1); }

  std::size_t leaves() const;
  // Leaf indices in order.
  std::vector<std::size_t> yield() const;
  // "(0 (1 2))", or with the words substituted.
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& words) const;
  // Leaf i becomes OneForm(assignment[i]).
  Term to_term(const std::vector<Form>& assignment) const;

  bool operator==(const Bracketing&) const = default;

 private:
  std::size_t index_ = 0;
  std::vector<Bracketing> kids_;
};

// All Catalan(n-1) bracketings of 0..n-1; the split after the first word
// comes first, so n=3 gives (0 (1 2)) then ((0 1) 2).
std::vector<Bracketing> bracketings(std::size_t n);

struct ParseResult {
  Bracketing bracketing;
  std::vector<Form> assignment;
  Term term;
  Dertree proof;
};

struct ParseStats {
  // Candidate sequents handed to prove.
  std::size_t candidates = 0;
};

// Results in bracketing order, then assignment order; at most
// opts.max_solutions of them. Throws UnknownWordError and
// PreconditionError on an empty sentence.
std::vector<ParseResult> parse(const std::vector<std::string>& words, Form goal, const Lexicon& lex,
                               const ExtensionRef& ext, const SearchOptions& opts = {},
                               ParseStats* stats = nullptr);

// Splits on whitespace.
std::vector<std::string> split_words(std::string_view sentence);

}  // namespace lambek

#endif  // LAMBEK_GRAMMAR_HPP_
