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

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lambek/error.hpp"

namespace lambek {
namespace {

Form P(const char* s) { return parse_category(s); }

const char* kItalian = "cosa\tS/(S/np)\nguarda\tS/inf\npassare\tinf/np";
const std::vector<std::string> kSentence = {"cosa", "guarda", "passare"};

std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

TEST(Lexicon, LoadsTabFormat) {
  Lexicon lex = load_lexicon(kItalian);
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.words(), kSentence);
  EXPECT_EQ(lex.categories("cosa"), std::vector<Form>{P("S/(S/np)")});
  EXPECT_EQ(lex.categories("passare"), std::vector<Form>{P("inf/np")});
  EXPECT_TRUE(load_lexicon("").empty());
}

TEST(Lexicon, CommentsMultipleCategoriesAndMerging) {
  Lexicon lex = load_lexicon("# comment\nw\ta, b/a\n\nw\tc,a\n# another\nv\tS\n");
  EXPECT_EQ(lex.categories("w"), (std::vector<Form>{at("a"), P("b/a"), at("c")}));
  EXPECT_EQ(lex.categories("v"), std::vector<Form>{at("S")});
}

TEST(Lexicon, JsonFormat) {
  Lexicon lex = load_lexicon(R"j({"cosa": ["S/(S/np)"], "w": ["a", "b"]})j");
  EXPECT_EQ(lex.categories("w").size(), 2u);
  EXPECT_TRUE(lex.contains("cosa"));
}

TEST(Lexicon, SyntaxErrorsCarryLine) {
  try {
    load_lexicon("w\tS/");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    load_lexicon("a\tb\nnocategory\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Lexicon, UnknownWord) {
  Lexicon lex = load_lexicon(kItalian);
  EXPECT_THROW(lex.categories("vedere"), UnknownWordError);
  try {
    parse({"cosa", "vedere", "xx"}, at("S"), lex, l_sequent());
    FAIL();
  } catch (const UnknownWordError& e) {
    EXPECT_EQ(e.words(), (std::vector<std::string>{"vedere", "xx"}));
  }
}

TEST(Lexicon, FileMatchesFixture) {
  Lexicon file = load_lexicon_file(testing::fixture_path("italian.tsv"));
  Lexicon inline_lex = load_lexicon(kItalian);
  EXPECT_EQ(file.words(), inline_lex.words());
  for (const std::string& w : file.words()) EXPECT_EQ(file.categories(w), inline_lex.categories(w));
}

TEST(Bracketings, CatalanCounts) {
  EXPECT_EQ(bracketings(1).size(), 1u);
  EXPECT_TRUE(bracketings(1)[0].is_leaf());
  EXPECT_EQ(bracketings(3).size(), 2u);
  EXPECT_EQ(bracketings(4).size(), 5u);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Bracketing> bs = bracketings(n);
    ASSERT_EQ(bs.size(), catalan(n - 1));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      EXPECT_EQ(bs[i].yield(), order);
      EXPECT_EQ(bs[i].leaves(), n);
      for (std::size_t j = i + 1; j < bs.size(); ++j) EXPECT_NE(bs[i], bs[j]);
    }
  }
}

TEST(Bracketings, OrderAndText) {
  std::vector<Bracketing> bs = bracketings(3);
  EXPECT_EQ(bs[0].to_string(), "(0 (1 2))");
  EXPECT_EQ(bs[1].to_string(), "((0 1) 2)");
  EXPECT_EQ(bs[0].to_string(kSentence), "(cosa (guarda passare))");
  EXPECT_EQ(bs[0].to_term({at("a"), at("b"), at("c")}), parse_term("(a, (b, c))"));
}

TEST(Parse, WorkedSentence) {
  Lexicon lex = load_lexicon(kItalian);
  ParseStats stats;
  SearchOptions opts;
  opts.max_solutions = 10;
  std::vector<ParseResult> rs = parse(kSentence, at("S"), lex, l_sequent(), opts, &stats);
  EXPECT_EQ(stats.candidates, 2u);
  ASSERT_FALSE(rs.empty());
  EXPECT_EQ(rs[0].bracketing, bracketings(3)[0]);
  EXPECT_EQ(rs[0].term, parse_term("(S/(S/np), (S/inf, inf/np))"));
  for (const ParseResult& r : rs) {
    EXPECT_TRUE(check_proof(r.proof).ok());
    EXPECT_TRUE(is_cut_free(r.proof));
    EXPECT_EQ(head(r.proof), make_sequent(l_sequent(), r.term, at("S")));
    EXPECT_EQ(r.bracketing.to_term(r.assignment), r.term);
  }
}

TEST(Parse, WorkedSentenceUnderNL) {
  Lexicon lex = load_lexicon(kItalian);
  EXPECT_TRUE(parse(kSentence, at("S"), lex, nl_sequent()).empty());
}

TEST(Parse, SingleWord) {
  Lexicon lex = load_lexicon(kItalian);
  std::vector<ParseResult> rs = parse({"cosa"}, P("S/(S/np)"), lex, nl_sequent());
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].proof.rule, RuleName::kSeqAxiom);
  EXPECT_THROW(parse({}, at("S"), lex, nl_sequent()), PreconditionError);
}

TEST(Parse, CandidateCountIsBracketingsTimesAssignments) {
  Lexicon lex = load_lexicon("x\ta,b,a/b\ny\tb,a\\b\nz\tb\n");
  ParseStats stats;
  SearchOptions opts;
  opts.max_solutions = 1000;
  parse({"x", "y", "z", "y"}, at("a"), lex, nl_sequent(), opts, &stats);
  EXPECT_EQ(stats.candidates, catalan(3) * 3 * 2 * 1 * 2);
}

TEST(Parse, AddingCategoriesKeepsParses) {
  Lexicon small = load_lexicon("x\ta/b\ny\tb\nz\ta\\c\n");
  Lexicon big = load_lexicon("x\ta/b,c\ny\tb,b/b\nz\ta\\c,c\\c\n");
  SearchOptions opts;
  opts.max_solutions = 1000;
  std::vector<std::string> words = {"x", "y", "z"};
  for (const ExtensionRef& e : {nl_sequent(), l_sequent(), nlp_sequent()}) {
    std::vector<ParseResult> a = parse(words, at("c"), small, e, opts);
    std::vector<ParseResult> b = parse(words, at("c"), big, e, opts);
    EXPECT_GE(b.size(), a.size());
    for (const ParseResult& r : a) {
      bool kept = false;
      for (const ParseResult& s : b)
        kept = kept || (s.term == r.term && s.bracketing == r.bracketing);
      EXPECT_TRUE(kept);
    }
  }
}

TEST(Parse, MaxSolutionsCapsTotal) {
  Lexicon lex = load_lexicon("x\ta,a/a\n");
  SearchOptions opts;
  opts.max_solutions = 2;
  EXPECT_EQ(parse({"x", "x", "x"}, at("a"), lex, l_sequent(), opts).size(), 2u);
}

TEST(SplitWords, Whitespace) {
  EXPECT_EQ(split_words("  cosa guarda\tpassare \n"), kSentence);
  EXPECT_TRUE(split_words("   ").empty());
}

}  // namespace
}  // namespace lambek
