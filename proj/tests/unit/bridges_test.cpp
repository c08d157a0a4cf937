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

#include "lambek/bridges.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lambek/search.hpp"
#include "lambek/serialize.hpp"

namespace lambek {
namespace {

using N = NatDedNode;

Form P(const char* s) { return parse_category(s); }
Sequent sq(const char* ext, const char* text) {
  return parse_sequent(builtin_extension(ext), text);
}
Dertree fixture(const char* name) {
  return dertree_from_json(read_file(testing::fixture_path(name)));
}

void expect_valid_dertree(const Dertree& d) {
  Result<std::vector<RuleWitness>> r = check_proof(d);
  EXPECT_TRUE(r.ok()) << r.error().describe();
}

TEST(GentzenToArrow, Axiom) {
  Result<ArrowProof> a = gentzen_to_arrow(Dertree::der(sq("NL", "a |- a"), RuleName::kSeqAxiom));
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(*a, ArrowProof::one(at("a")));
}

TEST(GentzenToArrow, RightSlashIsBeta) {
  Dertree d = Dertree::der(sq("NL", "a |- (a.b)/b"), RuleName::kRightSlash,
                           {Dertree::der(sq("NL", "(a, b) |- a.b"), RuleName::kRightDot,
                                         {Dertree::der(sq("NL", "a |- a"), RuleName::kSeqAxiom),
                                          Dertree::der(sq("NL", "b |- b"), RuleName::kSeqAxiom)})});
  Result<ArrowProof> a = gentzen_to_arrow(d);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a->kind, ArrowProof::Kind::kBeta);
  EXPECT_EQ(a->children.at(0), gentzen_to_arrow(d.children[0]).value());
  EXPECT_TRUE(check_arrow_proof(arrow_nl(), *a).ok());
}

TEST(GentzenToArrow, WorkedExample) {
  Dertree d = fixture("r_final.json");
  Result<ArrowProof> a = gentzen_to_arrow(d);
  ASSERT_TRUE(a.ok()) << a.error().describe();
  EXPECT_EQ(a->source, P("S/(S/np).(S/inf.inf/np)"));
  EXPECT_EQ(a->target, at("S"));
  Status s = check_arrow_proof(to_arrow_ext(*l_sequent()), *a);
  EXPECT_TRUE(s.ok()) << s.error().describe();
}

TEST(GentzenToArrow, RejectsInvalid) {
  Result<ArrowProof> a = gentzen_to_arrow(Dertree::der(sq("NL", "a |- b"), RuleName::kSeqAxiom));
  EXPECT_FALSE(a.ok());
  EXPECT_FALSE(gentzen_to_arrow(Dertree::unf(sq("NL", "a |- a"))).ok());
}

TEST(GentzenToArrow, CorpusAndRoundTrip) {
  for (const testing::Theorem& t : testing::theorem_corpus()) {
    Sequent s = testing::theorem_sequent(t);
    std::optional<Dertree> d = prove(s);
    ASSERT_TRUE(d) << t.name;
    Result<ArrowProof> a = gentzen_to_arrow(*d);
    ASSERT_TRUE(a.ok()) << t.name;
    EXPECT_EQ(a->source, delta_translation(s.ante));
    EXPECT_EQ(a->target, s.succ);
    ASSERT_TRUE(check_arrow_proof(to_arrow_ext(*s.ext), *a).ok()) << t.name;

    Result<Dertree> back = arrow_to_gentzen(*a, s.ext);
    ASSERT_TRUE(back.ok()) << t.name << ": " << back.error().describe();
    EXPECT_EQ(head(*back), make_sequent(s.ext, leaf(delta_translation(s.ante)), s.succ));
    expect_valid_dertree(*back);
  }
}

TEST(ArrowToGentzen, OneIsAxiom) {
  Result<Dertree> d = arrow_to_gentzen(ArrowProof::one(P("a/b")), nl_sequent());
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(*d, Dertree::der(sq("NL", "a/b |- a/b"), RuleName::kSeqAxiom));
}

TEST(ArrowToGentzen, CompIsCut) {
  ArrowProof p =
      ArrowProof::comp(ArrowProof::beta(ArrowProof::one(P("a.b"))), ArrowProof::one(P("(a.b)/b")));
  Result<Dertree> d = arrow_to_gentzen(p, nl_sequent());
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->rule, RuleName::kCutRule);
  EXPECT_EQ(head(*d), sq("NL", "a |- (a.b)/b"));
  expect_valid_dertree(*d);
}

TEST(ArrowToGentzen, BetaIsRightSlash) {
  Result<Dertree> d = arrow_to_gentzen(ArrowProof::beta(ArrowProof::one(P("a.b"))), nl_sequent());
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->rule, RuleName::kRightSlash);
  expect_valid_dertree(*d);
}

TEST(ArrowToGentzen, Obligations) {
  ArrowProof comm = ArrowProof::ext("comm", P("a.b"), P("b.a"));
  Result<Dertree> ok = arrow_to_gentzen(comm, nlp_sequent());
  ASSERT_TRUE(ok.ok());
  expect_valid_dertree(*ok);
  Result<Dertree> fail = arrow_to_gentzen(comm, nl_sequent());
  ASSERT_FALSE(fail.ok());
  EXPECT_EQ(fail.error().kind, CheckErrorKind::kObligation);
  EXPECT_NE(fail.error().message.find("a.b"), std::string::npos);

  std::size_t calls = 0;
  ObligationSolver solver = [&](Form a, Form b) -> std::optional<Dertree> {
    ++calls;
    return prove(make_sequent(nlp_sequent(), leaf(a), b));
  };
  Result<Dertree> supplied = arrow_to_gentzen(comm, nlp_sequent(), solver);
  ASSERT_TRUE(supplied.ok());
  EXPECT_EQ(calls, 1u);
}

TEST(NatDedToGentzen, Cases) {
  NatDedProof ax{nl_sequent(), N::axiom(at("a"))};
  Result<Dertree> a = natded_to_gentzen(ax);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(*a, Dertree::der(sq("NL", "a |- a"), RuleName::kSeqAxiom));

  NatDedProof di{nl_sequent(), N::dot_intro(N::axiom(at("a")), N::axiom(at("b")))};
  Result<Dertree> d = natded_to_gentzen(di);
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(*d, Dertree::der(sq("NL", "(a, b) |- a.b"), RuleName::kRightDot,
                             {Dertree::der(sq("NL", "a |- a"), RuleName::kSeqAxiom),
                              Dertree::der(sq("NL", "b |- b"), RuleName::kSeqAxiom)}));

  NatDedProof bad{nl_sequent(), N::dot_intro(N::axiom(at("a")), N::axiom(at("b")))};
  bad.root.succ = at("a");
  EXPECT_FALSE(natded_to_gentzen(bad).ok());
}

TEST(NatDedToGentzen, WorkedExample) {
  NatDedProof p = natded_from_json(read_file(testing::fixture_path("cosa_natded.json")));
  Result<Dertree> d = natded_to_gentzen(p);
  ASSERT_TRUE(d.ok()) << d.error().describe();
  EXPECT_EQ(prems(*d), p.root.ante);
  EXPECT_EQ(concl(*d), p.root.succ);
  expect_valid_dertree(*d);
  Result<ArrowProof> a = gentzen_to_arrow(*d);
  ASSERT_TRUE(a.ok());
  EXPECT_TRUE(check_arrow_proof(to_arrow_ext(*l_sequent()), *a).ok());
}

}  // namespace
}  // namespace lambek
