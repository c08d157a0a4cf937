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

#ifndef LAMBEK_TESTS_SUPPORT_CORPUS_HPP_
#define LAMBEK_TESTS_SUPPORT_CORPUS_HPP_

#include <string>
#include <vector>

#include "lambek/dertree.hpp"
#include "lambek/forms.hpp"

namespace lambek::testing {

// A named theorem of the form OneForm(ante) |- succ.
struct Theorem {
  std::string name;
  std::string ext;
  std::string ante;
  std::string succ;
};

// Conditional statements appear with their hypotheses discharged by the
// most general substitution that turns each hypothesis into an identity,
// e.g. (x.y -> z) => (x -> z/y) becomes x -> (x.y)/y.
inline std::vector<Theorem> theorem_corpus() {
  std::vector<Theorem> out = {
      {"L_a", "L", "x", "x"},
      {"L_b", "L", "(x.y).z", "x.(y.z)"},
      {"L_b'", "L", "x.(y.z)", "(x.y).z"},
      {"L_c", "L", "x", "(x.y)/y"},
      {"L_c'", "L", "y", "x\\(x.y)"},
      {"L_d", "L", "(z/y).y", "z"},
      {"L_d'", "L", "x.(x\\z)", "z"},
      {"L_e", "L", "x", "x"},
      {"L_f", "L", "x", "(x.y)/y"},
      {"L_g", "L", "(z/y).y", "z"},
      {"L_h", "L", "y", "(z/y)\\z"},
      {"L_i", "L", "(z/y).(y/x)", "z/x"},
      {"L_j", "L", "z/y", "(z/x)/(y/x)"},
      {"L_k", "L", "(x\\y)/z", "x\\(y/z)"},
      {"L_k'", "L", "x\\(y/z)", "(x\\y)/z"},
      {"L_l", "L", "(x/y)/z", "x/(z.y)"},
      {"L_l'", "L", "x/(z.y)", "(x/y)/z"},
      {"L_m", "L", "x.y", "x.y"},
      {"L_n", "L", "x/y", "x/y"},
      {"mainGeach", "L", "a/b", "(a/c)/(b/c)"},
      {"mainGeach'", "L", "b\\a", "(c\\b)\\(c\\a)"},
      {"secondaryGeach", "L", "b/c", "(a/b)\\(a/c)"},
      {"secondaryGeach'", "L", "c\\b", "(c\\a)/(b\\a)"},
      {"composition", "L", "(a/b).(b/c)", "a/c"},
      {"composition'", "L", "(c\\b).(b\\a)", "c\\a"},
      {"restructuring", "L", "(a\\b)/c", "a\\(b/c)"},
      {"restructuring'", "L", "a\\(b/c)", "(a\\b)/c"},
      {"currying", "L", "a/(b.c)", "(a/c)/b"},
      {"currying'", "L", "(a/c)/b", "a/(b.c)"},
      {"decurrying", "L", "(a.b)\\c", "b\\(a\\c)"},
      {"decurrying'", "L", "b\\(a\\c)", "(a.b)\\c"},
      {"permutation", "NLP", "b", "(b\\c)\\c"},
      {"exchange", "NLP", "a/b", "b\\a"},
      {"exchange'", "NLP", "b\\a", "a/b"},
      {"preposing", "NLP", "a", "b/(b/a)"},
      {"postposing", "NLP", "a", "(a\\b)\\b"},
      {"mixedComposition", "LP", "(a/b).(c\\b)", "c\\a"},
      {"mixedComposition'", "LP", "(b/c).(b\\a)", "a/c"},
  };
  // Valid under every extension; checked under NL and L.
  const std::vector<Theorem> general = {
      {"application", "", "(a/b).b", "a"},   {"application'", "", "b.(b\\a)", "a"},
      {"RightSlashDot", "", "a", "(a.c)/c"}, {"RightBackslashDot", "", "a", "b\\(b.a)"},
      {"coApplication", "", "a", "(a.b)/b"}, {"coApplication'", "", "a", "b\\(b.a)"},
      {"lifting", "", "a", "b/(a\\b)"},      {"lifting'", "", "a", "(b/a)\\b"},
  };
  for (const char* ext : {"NL", "L"}) {
    for (Theorem t : general) {
      t.ext = ext;
      out.push_back(t);
    }
  }
  return out;
}

inline Sequent theorem_sequent(const Theorem& t) {
  return make_sequent(builtin_extension(t.ext), leaf(parse_category(t.ante)),
                      parse_category(t.succ));
}

// Every form of degree <= max_degree over `atoms`, by increasing degree.
inline std::vector<Form> forms_up_to(int max_degree,
                                     const std::vector<std::string>& atoms = {"a", "b"}) {
  std::vector<Form> out;
  for (const std::string& a : atoms) out.push_back(at(a));
  std::size_t prev = 0;
  for (int d = 2; d <= max_degree; ++d) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < prev && j < prev) continue;  // built at a lower degree
        out.push_back(Form::slash(out[i], out[j]));
        out.push_back(Form::backslash(out[i], out[j]));
        out.push_back(Form::dot(out[i], out[j]));
      }
    }
    prev = n;
  }
  return out;
}

// Every term with exactly n leaves drawn from `leaves`.
inline std::vector<Term> terms_with_leaves(std::size_t n, const std::vector<Form>& leaves) {
  if (n == 1) {
    std::vector<Term> out;
    for (Form f : leaves) out.push_back(leaf(f));
    return out;
  }
  std::vector<Term> out;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Term> ls = terms_with_leaves(k, leaves);
    std::vector<Term> rs = terms_with_leaves(n - k, leaves);
    for (Term l : ls) {
      for (Term r : rs) out.push_back(Term::comma(l, r));
    }
  }
  return out;
}

inline std::vector<Term> terms_up_to(std::size_t max_leaves, const std::vector<Form>& leaves) {
  std::vector<Term> out;
  for (std::size_t n = 1; n <= max_leaves; ++n) {
    std::vector<Term> layer = terms_with_leaves(n, leaves);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(LAMBEK_FIXTURE_DIR) + "/" + name;
}

}  // namespace lambek::testing

#endif  // LAMBEK_TESTS_SUPPORT_CORPUS_HPP_
