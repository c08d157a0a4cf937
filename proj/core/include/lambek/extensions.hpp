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

#ifndef LAMBEK_EXTENSIONS_HPP_
#define LAMBEK_EXTENSIONS_HPP_

// Structural extensions as finite first-order rewrite rule sets.
//
// A gentzen extension relates Terms: (D1, D2) is in the relation iff some
// rule lhs -> rhs and substitution s give s(lhs) = D1 and s(rhs) = D2.
// Term metavariables bind whole subterms, form metavariables bind Forms.
// Arrow extensions are the analogous relations over Forms.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambek/forms.hpp"

namespace lambek {

struct FormPattern {
  enum class Kind { kMeta, kAtom, kSlash, kBackslash, kDot };

  Kind kind = Kind::kMeta;
  // Metavariable or atom name.
  std::string name;
  // Two children for connectives, in the same order as Form::left/right.
  std::vector<FormPattern> args;

  static FormPattern meta(std::string name);
  static FormPattern atom(std::string name);
  static FormPattern slash(FormPattern num, FormPattern den);
  static FormPattern backslash(FormPattern den, FormPattern num);
  static FormPattern dot(FormPattern left, FormPattern right);
  // The ground pattern of `f`.
  static FormPattern of(Form f);

  bool operator==(const FormPattern&) const = default;
};

struct TermPattern {
  enum class Kind { kMeta, kLeaf, kComma };

  Kind kind = Kind::kMeta;
  std::string meta;
  // Exactly one element for kLeaf.
  std::vector<FormPattern> leaf;
  // Two children for kComma.
  std::vector<TermPattern> args;

  static TermPattern metavar(std::string name);
  static TermPattern one(FormPattern f);
  static TermPattern comma(TermPattern left, TermPattern right);

  bool operator==(const TermPattern&) const = default;
};

// Substitution built while matching.
struct Bindings {
  std::vector<std::pair<std::string, Term>> terms;
  std::vector<std::pair<std::string, Form>> forms;

  const Term* term(const std::string& name) const;
  const Form* form(const std::string& name) const;
};

bool match(const FormPattern& p, Form f, Bindings& b);
bool match(const TermPattern& p, Term t, Bindings& b);
// nullopt when the pattern mentions a metavariable `b` does not bind.
std::optional<Form> instantiate(const FormPattern& p, const Bindings& b);
std::optional<Term> instantiate(const TermPattern& p, const Bindings& b);

// Metavariable tokens in rule text: one ASCII capital, optionally followed
// by digits or primes ("A", "B1", "C'").
bool is_metavariable_token(std::string_view token);

// Rule text uses the term syntax; a leaf that is a bare metavariable token
// is a term metavariable, other metavariable tokens are form metavariables.
TermPattern parse_term_pattern(std::string_view text);
FormPattern parse_form_pattern(std::string_view text);
std::string render_pattern(const TermPattern& p);
std::string render_pattern(const FormPattern& p);

std::vector<std::string> term_metavariables(const TermPattern& p);
std::vector<std::string> form_metavariables(const TermPattern& p);
std::vector<std::string> form_metavariables(const FormPattern& p);

struct StructRule {
  std::string name;
  TermPattern lhs;
  TermPattern rhs;

  bool operator==(const StructRule&) const = default;
};

class Extension {
 public:
  // `ext_sub` is computed from the rules (see extension_sub_ok).
  Extension(std::string name, std::vector<StructRule> rules, bool cond_cut);

  const std::string& name() const { return name_; }
  const std::vector<StructRule>& rules() const { return rules_; }
  // Trusted condCutExt capability flag.
  bool cond_cut() const { return cond_cut_; }
  // extensionSub holds by the structural check.
  bool ext_sub() const { return ext_sub_; }
  bool empty() const { return rules_.empty(); }

  const StructRule* find_rule(std::string_view name) const;

 private:
  std::string name_;
  std::vector<StructRule> rules_;
  bool cond_cut_;
  bool ext_sub_;
};

using ExtensionRef = std::shared_ptr<const Extension>;

ExtensionRef make_extension(std::string name, std::vector<StructRule> rules, bool cond_cut);

// Built-ins: NL = {}, L = {assocL, assocR}, NLP = {comm}, LP = NLP + L.
ExtensionRef nl_sequent();
ExtensionRef l_sequent();
ExtensionRef nlp_sequent();
ExtensionRef lp_sequent();
// "NL" | "L" | "NLP" | "LP"; nullptr otherwise.
ExtensionRef builtin_extension(std::string_view name);

// Name and rule list equality.
bool same_extension(const Extension& a, const Extension& b);
bool same_extension(const ExtensionRef& a, const ExtensionRef& b);

bool rule_relates(const StructRule& r, Term d1, Term d2);
bool ext_relates(const Extension& e, Term d1, Term d2);

struct Rewrite {
  Term result;
  Path path;
  std::string rule;
};

// Every t' obtained from `t` by rewriting one subterm D into D' with
// (D, D') related by `e`. Preorder positions, then rule order; repeated
// results are dropped. Rules whose rhs has metavariables missing from the
// lhs are skipped (their instances are not enumerable).
std::vector<Rewrite> ext_rewrites(const Extension& e, Term t);

// The converse: every t' such that rewriting one subterm of t' gives `t`.
std::vector<Rewrite> ext_rewrites_backward(const Extension& e, Term t);

// Every instance of `specific` is an instance of `general`.
bool rule_subsumes(const StructRule& general, const StructRule& specific);
// Every rule of e1 is subsumed by a rule of e2.
bool extends_ext(const Extension& e1, const Extension& e2);

// Rule-set union; cond_cut is the conjunction of the flags.
ExtensionRef add_extension(const Extension& e1, const Extension& e2,
                           std::optional<std::string> name = std::nullopt);

// Sufficient check that every Form leaf of D survives into D' for every
// instance (D, D') of the rule.
bool rule_preserves_subformulas(const StructRule& r);
bool extension_sub_ok(const Extension& e);

// ---- arrow extensions ----

struct ArrowRule {
  std::string name;
  FormPattern lhs;
  FormPattern rhs;

  bool operator==(const ArrowRule&) const = default;
};

struct ArrowExtension {
  std::string name;
  std::vector<ArrowRule> rules;

  const ArrowRule* find_rule(std::string_view rule_name) const;
};

const ArrowExtension& arrow_nl();
const ArrowExtension& arrow_l();
const ArrowExtension& arrow_nlp();
const ArrowExtension& arrow_lp();
const ArrowExtension* builtin_arrow_extension(std::string_view name);

bool arrow_rule_relates(const ArrowRule& r, Form a, Form b);
bool arrow_relates(const ArrowExtension& x, Form a, Form b);

// Rule-wise subsumption, as extends_ext.
bool arrow_extends(const ArrowExtension& x1, const ArrowExtension& x2);

// delta_translation lifted to patterns; term metavariables become form
// metavariables of the same name.
FormPattern delta_pattern(const TermPattern& p);

}  // namespace lambek

#endif  // LAMBEK_EXTENSIONS_HPP_
