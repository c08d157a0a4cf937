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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "lambek/serialize.hpp"

namespace lambek::cli {
namespace {

namespace fs = std::filesystem;
using testing::fixture_path;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lambek_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const std::string kGood = "(S/(S/np), (S/inf, inf/np)) |- S";

TEST_F(CliTest, ProveExitCodes) {
  EXPECT_EQ(run_cli({"prove", "--ext", "L", kGood}).code, kOk);
  Outcome ax = run_cli({"prove", "--ext", "NL", "a |- a"});
  EXPECT_EQ(ax.code, kOk);
  EXPECT_NE(ax.out.find("SeqAxiom"), std::string::npos);
  Outcome no = run_cli({"prove", "--ext", "NL", "a |- b"});
  EXPECT_EQ(no.code, kNegative);
  EXPECT_EQ(no.out, "no proof\n");
  EXPECT_EQ(run_cli({"prove", "--ext", "NL", "a |- "}).code, kUsage);
  EXPECT_EQ(run_cli({"prove", "--ext", "XX", "a |- a"}).code, kUsage);
  EXPECT_EQ(run_cli({"prove", "--format", "svg", "a |- a"}).code, kUsage);
  EXPECT_EQ(run_cli({"prove"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
}

TEST_F(CliTest, ProveOptions) {
  EXPECT_EQ(run_cli({"prove", "--ext", "L", "--max-depth", "3", kGood}).code, kNegative);
  EXPECT_EQ(run_cli({"prove", "--ext", "L", "--no-loop-check", "--max-depth", "8", kGood}).code,
            kOk);
  Outcome latex = run_cli({"prove", "--ext", "L", "--format", "latex", kGood});
  EXPECT_NE(latex.out.find("\\BinaryInfC"), std::string::npos);
  Outcome many = run_cli({"prove", "--format", "json", "--max-solutions", "5", "a.b |- a.b"});
  EXPECT_EQ(many.code, kOk);
  EXPECT_EQ(many.out.front(), '[');
}

TEST_F(CliTest, ProveOutputChecks) {
  for (const testing::Theorem& t : testing::theorem_corpus()) {
    std::string seq = t.ante + " |- " + t.succ;
    Outcome p = run_cli({"prove", "--ext", t.ext, "--format", "json", seq});
    ASSERT_EQ(p.code, kOk) << t.name;
    std::string file = write("proof.json", p.out);
    Outcome c = run_cli({"check", file});
    ASSERT_EQ(c.code, kOk) << t.name << ": " << c.out;
    EXPECT_EQ(c.out, "valid\n");
  }
}

TEST_F(CliTest, Parse) {
  std::string lex = fixture_path("italian.tsv");
  Outcome r = run_cli(
      {"parse", "--lexicon", lex, "--ext", "L", "--goal", "S", "cosa", "guarda", "passare"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("(cosa (guarda passare))\n", 0), 0u);
  EXPECT_NE(r.out.find("  cosa : S/(S/np)"), std::string::npos);
  Outcome one = run_cli({"parse", "--lexicon", lex, "--goal", "S/(S/np)", "cosa"});
  EXPECT_EQ(one.code, kOk);
  Outcome nl = run_cli({"parse", "--lexicon", lex, "--ext", "NL", "cosa", "guarda", "passare"});
  EXPECT_EQ(nl.code, kNegative);
  EXPECT_EQ(nl.out, "no parse\n");
  Outcome unknown = run_cli({"parse", "--lexicon", lex, "cosa", "vedere"});
  EXPECT_EQ(unknown.code, kUsage);
  EXPECT_NE(unknown.err.find("vedere"), std::string::npos);
  std::string bad = write("bad.tsv", "w\tS/\n");
  Outcome badlex = run_cli({"parse", "--lexicon", bad, "w"});
  EXPECT_EQ(badlex.code, kUsage);
  EXPECT_NE(badlex.err.find("line 1"), std::string::npos);
}

TEST_F(CliTest, Check) {
  EXPECT_EQ(run_cli({"check", fixture_path("r_final.json")}).code, kOk);
  EXPECT_EQ(run_cli({"check", "--system", "natded", fixture_path("cosa_natded.json")}).code, kOk);
  std::string text = read_file(fixture_path("r_final.json"));
  std::string mutated = text;
  const std::string axiom_succ = "\"succ\": \"inf\"";
  ASSERT_NE(mutated.find(axiom_succ), std::string::npos);
  mutated.replace(mutated.find(axiom_succ), axiom_succ.size(), "\"succ\": \"np\"");
  Outcome m = run_cli({"check", write("mutated.json", mutated)});
  EXPECT_EQ(m.code, kNegative);
  EXPECT_EQ(m.out.rfind("invalid: ", 0), 0u);
  Outcome trunc = run_cli({"check", write("trunc.json", text.substr(0, text.size() / 2))});
  EXPECT_EQ(trunc.code, kUsage);
  EXPECT_EQ(run_cli({"check", (dir_ / "missing.json").string()}).code, kUsage);
  EXPECT_EQ(run_cli({"check", "--system", "tableau", fixture_path("r_final.json")}).code, kUsage);
}

TEST_F(CliTest, Translate) {
  Outcome a =
      run_cli({"translate", "--from", "gentzen", "--to", "arrow", fixture_path("r_final.json")});
  ASSERT_EQ(a.code, kOk) << a.err;
  std::string arrow = write("arrow.json", a.out);
  EXPECT_EQ(run_cli({"check", arrow}).code, kOk);
  Outcome g = run_cli({"translate", "--from", "arrow", "--to", "gentzen", arrow});
  ASSERT_EQ(g.code, kOk) << g.err;
  EXPECT_EQ(run_cli({"check", write("back.json", g.out)}).code, kOk);
  Outcome n = run_cli(
      {"translate", "--from", "natded", "--to", "gentzen", fixture_path("cosa_natded.json")});
  ASSERT_EQ(n.code, kOk);
  EXPECT_EQ(run_cli({"check", write("nd.json", n.out)}).code, kOk);
  EXPECT_EQ(
      run_cli({"translate", "--from", "gentzen", "--to", "natded", fixture_path("r_final.json")})
          .code,
      kUsage);
  EXPECT_EQ(
      run_cli({"translate", "--from", "x", "--to", "arrow", fixture_path("r_final.json")}).code,
      kUsage);
}

TEST_F(CliTest, Oracle) {
  Outcome yes = run_cli({"oracle", "--ext", "L", "--depth", "8", kGood});
  EXPECT_EQ(yes.code, kOk);
  EXPECT_EQ(yes.out, "provable\n");
  Outcome no = run_cli({"oracle", "--ext", "NL", "--depth", "6", "a |- a/b"});
  EXPECT_EQ(no.code, kNegative);
  EXPECT_EQ(no.out, "not provable within depth 6\n");
}

TEST_F(CliTest, Render) {
  Outcome tex = run_cli({"render", "--format", "latex", fixture_path("r_final.json")});
  ASSERT_EQ(tex.code, kOk);
  Dertree d = dertree_from_json(read_file(fixture_path("r_final.json")));
  std::size_t binary = 0;
  for (const Dertree* s : subtrees(d)) binary += s->children.size() == 2;
  std::size_t found = 0;
  for (std::size_t p = tex.out.find("\\BinaryInfC"); p != std::string::npos;
       p = tex.out.find("\\BinaryInfC", p + 1)) {
    ++found;
  }
  EXPECT_EQ(found, binary);
  Outcome tree = run_cli({"render", fixture_path("cosa_natded.json")});
  EXPECT_EQ(tree.code, kOk);
  EXPECT_NE(tree.out.find("SlashElim"), std::string::npos);
}

TEST_F(CliTest, Deterministic) {
  std::vector<std::string> args = {"prove",           "--ext", "LP",
                                   "--max-solutions", "4",     "(a/b).(c\\b) |- c\\a"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST_F(CliTest, Help) {
  Outcome h = run_cli({"--help"});
  EXPECT_EQ(h.code, kOk);
  EXPECT_NE(h.out.find("prove"), std::string::npos);
}

}  // namespace
}  // namespace lambek::cli
