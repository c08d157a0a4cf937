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

#include "lambek/serialize.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lambek/bridges.hpp"
#include "lambek/error.hpp"
#include "lambek/search.hpp"

namespace lambek {
namespace {

std::string fixture(const char* name) { return read_file(testing::fixture_path(name)); }

TEST(DertreeJson, FixturesRoundTrip) {
  for (const char* name : {"r0.json", "r1.json", "r_final.json"}) {
    Dertree d = dertree_from_json(fixture(name));
    EXPECT_EQ(dertree_from_json(to_json(d)), d) << name;
    EXPECT_EQ(to_json(dertree_from_json(to_json(d))), to_json(d));
  }
}

TEST(DertreeJson, SearchedProofsRoundTrip) {
  for (const testing::Theorem& t : testing::theorem_corpus()) {
    std::optional<Dertree> d = prove(testing::theorem_sequent(t));
    ASSERT_TRUE(d);
    EXPECT_EQ(dertree_from_json(to_json(*d, 0)), *d) << t.name;
  }
}

TEST(DertreeJson, Shape) {
  Dertree d = dertree_from_json(
      R"j({"der":{"seq":{"ext":"L","ante":"(S/inf, inf/np)","succ":"S/np"},"rule":"RightSlash",)j"
      R"j("children":[{"unf":{"seq":{"ext":"L","ante":"((S/inf, inf/np), np)","succ":"S"}}}]}})j");
  EXPECT_EQ(d.rule, RuleName::kRightSlash);
  ASSERT_EQ(d.children.size(), 1u);
  EXPECT_TRUE(d.children[0].is_unf());
  EXPECT_TRUE(check_node(d).ok());
}

TEST(DertreeJson, Errors) {
  EXPECT_THROW(dertree_from_json("{\"der\": "), SyntaxError);
  EXPECT_THROW(dertree_from_json("[1, 2]"), FormatError);
  EXPECT_THROW(
      dertree_from_json(R"j({"der":{"seq":{"ext":"L","ante":"a","succ":"a"},"rule":"Ax"}})j"),
      FormatError);
  EXPECT_THROW(dertree_from_json(R"j({"unf":{"seq":{"ext":"QQ","ante":"a","succ":"a"}}})j"),
               FormatError);
  EXPECT_THROW(dertree_from_json(R"j({"unf":{"seq":{"ext":"L","ante":"a/","succ":"a"}}})j"),
               SyntaxError);
}

TEST(ExtensionJson, RoundTripAndCustom) {
  for (const char* n : {"NL", "L", "NLP", "LP"}) {
    ExtensionRef e = builtin_extension(n);
    ExtensionRef back = extension_from_json(to_json(*e));
    EXPECT_TRUE(same_extension(back, e)) << n;
    EXPECT_EQ(back->cond_cut(), e->cond_cut());
  }
  ExtensionRef c = extension_from_json(
      R"j({"name":"C","cond_cut":false,"rules":[{"name":"swap","lhs":"(A,B)","rhs":"(B,A)"}]})j");
  EXPECT_FALSE(c->cond_cut());
  EXPECT_TRUE(ext_relates(*c, parse_term("(x, y)"), parse_term("(y, x)")));
  Dertree d = Dertree::unf(make_sequent(c, parse_term("(x, y)"), at("z")));
  EXPECT_EQ(dertree_from_json(to_json(d)), d);
}

TEST(ExtensionJson, Resolve) {
  EXPECT_TRUE(same_extension(resolve_extension("L"), l_sequent()));
  EXPECT_THROW(resolve_extension("nope"), LambekError);
  EXPECT_THROW(resolve_extension("@/nonexistent/ext.json"), LambekError);
}

TEST(ArrowJson, RoundTrip) {
  Dertree d = dertree_from_json(fixture("r_final.json"));
  ArrowDocument doc{to_arrow_ext(*exten(d)), gentzen_to_arrow(d).value()};
  ArrowDocument back = arrow_from_json(to_json(doc));
  EXPECT_EQ(back.proof, doc.proof);
  EXPECT_EQ(back.ext.rules, doc.ext.rules);
  EXPECT_EQ(back.ext.name, doc.ext.name);
  ArrowExtension x = arrow_extension_from_json(to_json(arrow_lp()));
  EXPECT_EQ(x.rules, arrow_lp().rules);
}

TEST(NatDedJson, RoundTrip) {
  NatDedProof p = natded_from_json(fixture("cosa_natded.json"));
  NatDedProof back = natded_from_json(to_json(p));
  EXPECT_EQ(back.root, p.root);
  EXPECT_TRUE(same_extension(back.ext, p.ext));
}

TEST(Systems, Detect) {
  EXPECT_EQ(detect_system(fixture("r_final.json")), ProofSystem::kGentzen);
  EXPECT_EQ(detect_system(fixture("r0.json")), ProofSystem::kGentzen);
  EXPECT_EQ(detect_system(fixture("cosa_natded.json")), ProofSystem::kNatDed);
  ArrowDocument doc{arrow_nl(), ArrowProof::one(at("a"))};
  EXPECT_EQ(detect_system(to_json(doc)), ProofSystem::kArrow);
  EXPECT_THROW(detect_system("{\"other\": 1}"), FormatError);
  for (ProofSystem s : {ProofSystem::kGentzen, ProofSystem::kArrow, ProofSystem::kNatDed}) {
    EXPECT_EQ(parse_proof_system(to_string(s)), s);
  }
}

TEST(Files, MissingFile) { EXPECT_THROW(read_file("/nonexistent/x.json"), LambekError); }

}  // namespace
}  // namespace lambek
