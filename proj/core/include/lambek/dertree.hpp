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

#ifndef LAMBEK_DERTREE_HPP_
#define LAMBEK_DERTREE_HPP_

// Sequents and sequent-calculus derivation trees.
//
// A Dertree is either finished (Der: a sequent, a rule name and the
// premise subtrees) or unfinished (Unf: a bare sequent). Trees carry no
// rule witnesses; check_node recomputes them from the sequents.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambek/error.hpp"
#include "lambek/extensions.hpp"
#include "lambek/forms.hpp"

namespace lambek {

struct Sequent {
  ExtensionRef ext;
  Term ante;
  Form succ;

  bool operator==(const Sequent& other) const {
    return ante == other.ante && succ == other.succ && same_extension(ext, other.ext);
  }
  // "ANTE |- SUCC"
  std::string to_string() const;
};

Sequent make_sequent(ExtensionRef ext, Term ante, Form succ);
// Parses "TERM |- FORM".
Sequent parse_sequent(ExtensionRef ext, std::string_view text);

enum class RuleName {
  kSeqAxiom,
  kRightSlash,
  kRightBackslash,
  kRightDot,
  kLeftSlash,
  kLeftBackslash,
  kLeftDot,
  kCutRule,
  kSeqExt,
};

inline constexpr RuleName kAllRules[] = {
    RuleName::kSeqAxiom, RuleName::kRightSlash, RuleName::kRightBackslash,
    RuleName::kRightDot, RuleName::kLeftSlash,  RuleName::kLeftBackslash,
    RuleName::kLeftDot,  RuleName::kCutRule,    RuleName::kSeqExt,
};

const char* to_string(RuleName r);
std::optional<RuleName> parse_rule_name(std::string_view text);
// Number of premises the rule takes.
std::size_t rule_arity(RuleName r);

struct Dertree {
  Sequent seq;
  // nullopt for Unf.
  std::optional<RuleName> rule;
  std::vector<Dertree> children;

  static Dertree unf(Sequent s) { return {std::move(s), std::nullopt, {}}; }
  static Dertree der(Sequent s, RuleName r, std::vector<Dertree> children = {}) {
    return {std::move(s), r, std::move(children)};
  }

  bool is_unf() const { return !rule.has_value(); }
  bool is_der() const { return rule.has_value(); }

  bool operator==(const Dertree&) const = default;
};

// Data justifying one inference. Fields irrelevant to the rule stay empty.
struct RuleWitness {
  RuleName rule = RuleName::kSeqAxiom;
  // Position in the conclusion's antecedent of the rewritten occurrence.
  std::optional<Path> path;
  std::optional<Form> a;
  std::optional<Form> b;
  // Left rules and Cut: the side antecedent. SeqExt: the child's subterm.
  std::optional<Term> delta;
  // SeqExt: the conclusion's subterm, and the extension rule relating them.
  std::optional<Term> delta_prime;
  std::string ext_rule;
};

inline const Sequent& head(const Dertree& d) { return d.seq; }
inline Form concl(const Dertree& d) { return d.seq.succ; }
inline Term prems(const Dertree& d) { return d.seq.ante; }
inline const ExtensionRef& exten(const Dertree& d) { return d.seq.ext; }

// Throws UnfinishedProofError on an Unf leaf.
int degree_proof(const Dertree& d);
bool is_cut_free(const Dertree& d);
bool is_complete(const Dertree& d);
std::size_t node_count(const Dertree& d);
// Layers of rule applications; Unf leaves count 0, axioms 1.
std::size_t tree_depth(const Dertree& d);

// Validates the root inference of a Der node against the heads of its
// children. Witnesses are searched over antecedent paths in preorder.
Result<RuleWitness> check_node(const Dertree& d);

// Validates a whole tree; witnesses are returned in preorder of nodes.
Result<std::vector<RuleWitness>> check_proof(const Dertree& d);

struct Premise {
  Term ante;
  Form succ;
  bool operator==(const Premise&) const = default;
};

// A backward rule application, without the extension attached.
struct Expansion {
  RuleName rule;
  std::vector<Premise> premises;
  bool operator==(const Expansion&) const = default;
};

// Backward applications of one rule to (ante |- succ), in preorder of the
// rewritten occurrence. Cut formulas come from `cut_candidates`.
std::vector<Expansion> rule_expansions(const Extension& e, Term ante, Form succ, RuleName rule,
                                       const std::vector<Form>& cut_candidates = {});

// One-level backward expansions of Unf(s); children are Unf leaves.
// CutRule instances are produced only when `allow_cut`, with cut formulas
// drawn from `cut_candidates`.
std::vector<Dertree> expansions(const Sequent& s, bool allow_cut = false,
                                const std::vector<Form>& cut_candidates = {});

bool is_subproof_one(const Dertree& q, const Dertree& p);
bool is_subproof(const Dertree& q, const Dertree& p);

// Every subtree of `d`, preorder.
std::vector<const Dertree*> subtrees(const Dertree& d);

// Throws PreconditionError when q is not a subproof of p, p is not cut
// free, or the extension of p fails extension_sub_ok.
bool check_subformula_property(const Dertree& q, const Dertree& p);

// d2 is reachable from d1 by repeatedly expanding Unf leaves.
bool refines(const Dertree& d1, const Dertree& d2);

}  // namespace lambek

#endif  // LAMBEK_DERTREE_HPP_
