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

#include "lambek/forms.hpp"

#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "lambek/error.hpp"
#include "oracles.hpp"

namespace lambek {
namespace {

using testing::degree_formula_clauses;
using testing::forms_up_to;

Form P(const char* s) { return parse_category(s); }

TEST(Forms, HashConsing) {
  EXPECT_EQ(Form::slash(at("S"), at("np")), Form::slash(at("S"), at("np")));
  EXPECT_NE(Form::slash(at("S"), at("np")), Form::backslash(at("S"), at("np")));
  EXPECT_EQ(Term::comma(leaf(at("a")), leaf(at("b"))).hash(),
            Term::comma(leaf(at("a")), leaf(at("b"))).hash());
  EXPECT_EQ(Form::slash(at("S"), at("np")).num(), at("S"));
  EXPECT_EQ(Form::backslash(at("np"), at("S")).den(), at("np"));
}

TEST(Forms, BadAtomNames) {
  EXPECT_THROW(Form::atom(""), SyntaxError);
  EXPECT_THROW(Form::atom("a b"), SyntaxError);
  EXPECT_THROW(Form::atom("a/b"), SyntaxError);
  EXPECT_THROW(Form::atom("a,"), SyntaxError);
}

TEST(DeltaTranslation, Examples) {
  EXPECT_EQ(delta_translation(leaf(at("S"))), at("S"));
  EXPECT_EQ(delta_translation(Term::comma(leaf(at("a")), leaf(at("b")))),
            Form::dot(at("a"), at("b")));
  Term t = Term::comma(Term::comma(leaf(at("a")), leaf(at("b"))), leaf(at("c")));
  EXPECT_EQ(delta_translation(t), Form::dot(Form::dot(at("a"), at("b")), at("c")));
}

TEST(DegreeFormula, Examples) {
  EXPECT_EQ(degree_formula(at("np")), 1);
  EXPECT_EQ(degree_formula(Form::slash(at("S"), at("np"))), 2);
  EXPECT_EQ(degree_formula(Form::slash(at("S"), Form::slash(at("S"), at("np")))), 3);
}

TEST(DegreeFormula, MatchesClausesAndIsOneOnlyOnAtoms) {
  for (Form f : forms_up_to(3)) {
    ASSERT_EQ(degree_formula(f), degree_formula_clauses(f)) << render_category(f);
    EXPECT_EQ(f.degree(), degree_formula(f));
    EXPECT_EQ(degree_formula(f) == 1, f.is_atom());
  }
}

TEST(SubFormula, Examples) {
  EXPECT_TRUE(is_sub_formula(at("np"), at("np")));
  EXPECT_TRUE(is_sub_formula(at("np"), P("S/np")));
  EXPECT_FALSE(is_sub_formula(P("S/np"), at("S")));
}

TEST(SubFormTerm, Examples) {
  EXPECT_TRUE(is_sub_form_term(at("np"), leaf(P("S/np"))));
  EXPECT_TRUE(is_sub_form_term(at("S"), Term::comma(leaf(at("S")), leaf(at("np")))));
  EXPECT_FALSE(is_sub_form_term(at("inf"), leaf(at("S"))));
}

class SubFormulaProps : public ::testing::Test {
 protected:
  std::vector<Form> forms = forms_up_to(2, {"a", "b"});
};

TEST_F(SubFormulaProps, Transitive) {
  for (Form a : forms) {
    for (Form b : forms) {
      if (!is_sub_formula(a, b)) continue;
      for (Form c : forms) {
        if (is_sub_formula(b, c)) {
          EXPECT_TRUE(is_sub_formula(a, c));
        }
      }
    }
  }
}

TEST_F(SubFormulaProps, Inversions) {
  std::vector<Form> big = forms_up_to(3);
  for (Form a : forms) {
    for (Form b : big) {
      bool sub = is_sub_formula(a, b);
      if (b.is_atom()) {
        EXPECT_EQ(sub, a == b);
      } else {
        EXPECT_EQ(sub, a == b || is_sub_formula(a, b.left()) || is_sub_formula(a, b.right()));
      }
    }
  }
}

TEST_F(SubFormulaProps, SubFormTermIsSomeLeaf) {
  std::vector<Term> terms = testing::terms_up_to(3, {at("a"), P("a/b"), P("b.a")});
  for (Term t : terms) {
    std::vector<Form> leaves = leaf_forms(t);
    for (Form f : forms) {
      bool any = false;
      for (Form l : leaves) any = any || is_sub_formula(f, l);
      EXPECT_EQ(is_sub_form_term(f, t), any);
    }
  }
}

TEST(SubFormulas, PreorderWithoutDuplicates) {
  std::vector<Form> subs = sub_formulas(P("(a/b).a"));
  ASSERT_EQ(subs.size(), 4u);
  EXPECT_EQ(subs[0], P("(a/b).a"));
  EXPECT_EQ(subs[1], P("a/b"));
  EXPECT_EQ(subs[2], at("a"));
  EXPECT_EQ(subs[3], at("b"));
}

TEST(CategoryText, ParseExamples) {
  EXPECT_EQ(P("S/(S/np)"), Form::slash(at("S"), Form::slash(at("S"), at("np"))));
  EXPECT_EQ(P("a"), at("a"));
  EXPECT_EQ(P("x/y/z"), Form::slash(Form::slash(at("x"), at("y")), at("z")));
  EXPECT_EQ(P("B\\A\\C"), Form::backslash(at("B"), Form::backslash(at("A"), at("C"))));
  EXPECT_EQ(P("a.b.c"), Form::dot(Form::dot(at("a"), at("b")), at("c")));
  EXPECT_EQ(P("a\\b/c"), Form::slash(Form::backslash(at("a"), at("b")), at("c")));
  EXPECT_EQ(P("a/b.c"), Form::dot(Form::slash(at("a"), at("b")), at("c")));
  EXPECT_EQ(P(" ( a / b ) "), Form::slash(at("a"), at("b")));
}

TEST(CategoryText, RenderExamples) {
  EXPECT_EQ(render_category(P("S/np")), "S/np");
  EXPECT_EQ(render_category(P("S")), "S");
  EXPECT_EQ(render_category(Form::dot(at("a"), Form::backslash(at("a"), at("b")))), "a.a\\b");
  EXPECT_EQ(render_category(P("S/(S/np)")), "S/(S/np)");
}

TEST(CategoryText, Malformed) {
  for (const char* bad : {"", "S/", "(a", "a)", "a b", "/a", "a..b", "a,b"}) {
    EXPECT_THROW(P(bad), SyntaxError) << bad;
  }
  try {
    P("a/(b");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

Form random_form(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 3);
  int k = depth == 0 ? 0 : pick(rng);
  if (k == 0) return at(std::string(1, static_cast<char>('a' + rng() % 3)));
  Form l = random_form(rng, depth - 1);
  Form r = random_form(rng, depth - 1);
  if (k == 1) return Form::slash(l, r);
  if (k == 2) return Form::backslash(l, r);
  return Form::dot(l, r);
}

TEST(CategoryText, RoundTrip) {
  for (Form f : forms_up_to(3)) ASSERT_EQ(P(render_category(f).c_str()), f);
  std::mt19937 rng(7);
  for (int i = 0; i < 5000; ++i) {
    Form f = random_form(rng, 6);
    ASSERT_EQ(parse_category(render_category(f)), f) << render_category(f);
  }
}

TEST(TermText, ParseAndRender) {
  Term t = parse_term("(S/(S/np), (S/inf, inf/np))");
  ASSERT_TRUE(t.is_comma());
  EXPECT_EQ(t.left(), leaf(P("S/(S/np)")));
  EXPECT_EQ(t.leaves(), 3u);
  EXPECT_EQ(render_term(t), "(S/(S/np), (S/inf, inf/np))");
  EXPECT_EQ(parse_term("a, b"), Term::comma(leaf(at("a")), leaf(at("b"))));
  EXPECT_EQ(parse_term("(a.b)"), leaf(P("a.b")));
  EXPECT_THROW(parse_term("(a, b"), SyntaxError);
  for (Term u : testing::terms_up_to(4, {at("a"), P("a/b")})) {
    ASSERT_EQ(parse_term(render_term(u)), u);
  }
}

TEST(Paths, StringForm) {
  Path p = Path{}.child(Dir::kRight).child(Dir::kLeft);
  EXPECT_EQ(p.to_string(), "RL");
  EXPECT_EQ(Path::from_string("RL"), p);
  EXPECT_TRUE(Path::from_string("").empty());
}

TEST(Order, CompareIsTotalAndConsistent) {
  std::vector<Form> fs = forms_up_to(2);
  for (Form a : fs) {
    for (Form b : fs) {
      int c = compare(a, b);
      EXPECT_EQ(c == 0, a == b);
      EXPECT_EQ(c, -compare(b, a));
    }
  }
}

}  // namespace
}  // namespace lambek
