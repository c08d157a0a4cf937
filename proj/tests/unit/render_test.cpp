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

#include "lambek/render.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lambek/bridges.hpp"
#include "lambek/search.hpp"
#include "lambek/serialize.hpp"

namespace lambek {
namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

std::size_t nodes_with(const Dertree& d, std::size_t kids) {
  std::size_t n = d.children.size() == kids;
  for (const Dertree& c : d.children) n += nodes_with(c, kids);
  return n;
}

Dertree r_final() { return dertree_from_json(read_file(testing::fixture_path("r_final.json"))); }

TEST(Latex, OneInferencePerNode) {
  std::vector<Dertree> trees = {r_final()};
  for (const testing::Theorem& t : testing::theorem_corpus()) {
    trees.push_back(*prove(testing::theorem_sequent(t)));
  }
  for (const Dertree& d : trees) {
    std::string tex = render_latex(d);
    EXPECT_EQ(count(tex, "\\BinaryInfC"), nodes_with(d, 2));
    EXPECT_EQ(count(tex, "\\UnaryInfC"), nodes_with(d, 1));
    EXPECT_EQ(count(tex, "\\AxiomC"), nodes_with(d, 0));
    EXPECT_EQ(count(tex, "\\begin{prooftree}"), 1u);
  }
}

TEST(Latex, UnfinishedLeaf) {
  Dertree r1 = dertree_from_json(read_file(testing::fixture_path("r1.json")));
  std::string tex = render_latex(r1);
  EXPECT_EQ(count(tex, "\\BinaryInfC"), 1u);
  EXPECT_EQ(count(tex, "\\AxiomC"), 2u);
}

TEST(Latex, Categories) {
  EXPECT_EQ(latex_category(parse_category("S/np")), "\\mathrm{S}/\\mathrm{np}");
  EXPECT_NE(latex_category(parse_category("a\\b")).find("\\backslash"), std::string::npos);
  EXPECT_NE(latex_category(parse_category("a.b")).find("\\cdot"), std::string::npos);
  EXPECT_NE(latex_term(parse_term("(a, b)")).find(","), std::string::npos);
}

TEST(Tree, MentionsEverySequentAndRule) {
  Dertree d = r_final();
  std::string tree = render_tree(d);
  for (const Dertree* s : subtrees(d)) {
    EXPECT_NE(tree.find(s->seq.to_string()), std::string::npos);
    EXPECT_NE(tree.find(to_string(*s->rule)), std::string::npos);
  }
  EXPECT_EQ(count(tree, "\n"), node_count(d));
}

TEST(Tree, OtherSystems) {
  Dertree d = r_final();
  ArrowProof a = gentzen_to_arrow(d).value();
  std::string at = render_tree(a);
  EXPECT_EQ(count(at, "\n"), node_count(a));
  EXPECT_EQ(count(render_latex(a), "\\BinaryInfC"), count(at, "comp"));
  NatDedProof n = natded_from_json(read_file(testing::fixture_path("cosa_natded.json")));
  EXPECT_NE(render_tree(n.root).find("SlashElim"), std::string::npos);
  EXPECT_EQ(count(render_latex(n.root), "\\begin{prooftree}"), 1u);
}

TEST(Render, Deterministic) {
  Dertree d = r_final();
  EXPECT_EQ(render_tree(d), render_tree(d));
  EXPECT_EQ(render_latex(d), render_latex(d));
}

}  // namespace
}  // namespace lambek
