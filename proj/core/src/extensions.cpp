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

#include "lambek/extensions.hpp"

#include <algorithm>
#include <map>

#include "lambek/error.hpp"
#include "lambek/term_replace.hpp"

namespace lambek {

// ---- pattern construction ----

FormPattern FormPattern::meta(std::string name) { return {Kind::kMeta, std::move(name), {}}; }
FormPattern FormPattern::atom(std::string name) { return {Kind::kAtom, std::move(name), {}}; }
FormPattern FormPattern::slash(FormPattern num, FormPattern den) {
  return {Kind::kSlash, {}, {std::move(num), std::move(den)}};
}
FormPattern FormPattern::backslash(FormPattern den, FormPattern num) {
  return {Kind::kBackslash, {}, {std::move(den), std::move(num)}};
}
FormPattern FormPattern::dot(FormPattern left, FormPattern right) {
  return {Kind::kDot, {}, {std::move(left), std::move(right)}};
}

FormPattern FormPattern::of(Form f) {
  switch (f.kind()) {
    case Form::Kind::kAtom:
      return atom(f.name());
    case Form::Kind::kSlash:
      return slash(of(f.left()), of(f.right()));
    case Form::Kind::kBackslash:
      return backslash(of(f.left()), of(f.right()));
    case Form::Kind::kDot:
      return dot(of(f.left()), of(f.right()));
  }
  return atom(f.name());
}

TermPattern TermPattern::metavar(std::string name) {
  return {Kind::kMeta, std::move(name), {}, {}};
}
TermPattern TermPattern::one(FormPattern f) { return {Kind::kLeaf, {}, {std::move(f)}, {}}; }
TermPattern TermPattern::comma(TermPattern left, TermPattern right) {
  return {Kind::kComma, {}, {}, {std::move(left), std::move(right)}};
}

const Term* Bindings::term(const std::string& name) const {
  for (const auto& [n, t] : terms) {
    if (n == name) return &t;
  }
  return nullptr;
}

const Form* Bindings::form(const std::string& name) const {
  for (const auto& [n, f] : forms) {
    if (n == name) return &f;
  }
  return nullptr;
}

// ---- ground matching ----

static Form::Kind form_kind(FormPattern::Kind k) {
  switch (k) {
    case FormPattern::Kind::kSlash:
      return Form::Kind::kSlash;
    case FormPattern::Kind::kBackslash:
      return Form::Kind::kBackslash;
    case FormPattern::Kind::kDot:
      return Form::Kind::kDot;
    default:
      return Form::Kind::kAtom;
  }
}

bool match(const FormPattern& p, Form f, Bindings& b) {
  switch (p.kind) {
    case FormPattern::Kind::kMeta: {
      if (const Form* bound = b.form(p.name)) return *bound == f;
      b.forms.emplace_back(p.name, f);
      return true;
    }
    case FormPattern::Kind::kAtom:
      return f.is_atom() && f.name() == p.name;
    default:
      return f.kind() == form_kind(p.kind) && match(p.args[0], f.left(), b) &&
             match(p.args[1], f.right(), b);
  }
}

bool match(const TermPattern& p, Term t, Bindings& b) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta: {
      if (const Term* bound = b.term(p.meta)) return *bound == t;
      b.terms.emplace_back(p.meta, t);
      return true;
    }
    case TermPattern::Kind::kLeaf:
      return t.is_one() && match(p.leaf[0], t.form(), b);
    case TermPattern::Kind::kComma:
      return t.is_comma() && match(p.args[0], t.left(), b) && match(p.args[1], t.right(), b);
  }
  return false;
}

std::optional<Form> instantiate(const FormPattern& p, const Bindings& b) {
  switch (p.kind) {
    case FormPattern::Kind::kMeta:
      if (const Form* f = b.form(p.name)) return *f;
      return std::nullopt;
    case FormPattern::Kind::kAtom:
      return Form::atom(p.name);
    case FormPattern::Kind::kSlash:
    case FormPattern::Kind::kBackslash:
    case FormPattern::Kind::kDot: {
      auto l = instantiate(p.args[0], b);
      if (!l) return std::nullopt;
      auto r = instantiate(p.args[1], b);
      if (!r) return std::nullopt;
      if (p.kind == FormPattern::Kind::kSlash) return Form::slash(*l, *r);
      if (p.kind == FormPattern::Kind::kBackslash) return Form::backslash(*l, *r);
      return Form::dot(*l, *r);
    }
  }
  return std::nullopt;
}

std::optional<Term> instantiate(const TermPattern& p, const Bindings& b) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta:
      if (const Term* t = b.term(p.meta)) return *t;
      return std::nullopt;
    case TermPattern::Kind::kLeaf: {
      auto f = instantiate(p.leaf[0], b);
      if (!f) return std::nullopt;
      return Term::one(*f);
    }
    case TermPattern::Kind::kComma: {
      auto l = instantiate(p.args[0], b);
      if (!l) return std::nullopt;
      auto r = instantiate(p.args[1], b);
      if (!r) return std::nullopt;
      return Term::comma(*l, *r);
    }
  }
  return std::nullopt;
}

// ---- text ----

bool is_metavariable_token(std::string_view token) {
  if (token.empty() || token[0] < 'A' || token[0] > 'Z') return false;
  return std::all_of(token.begin() + 1, token.end(),
                     [](char c) { return (c >= '0' && c <= '9') || c == '\''; });
}

static FormPattern pattern_from_form(Form f) {
  switch (f.kind()) {
    case Form::Kind::kAtom:
      return is_metavariable_token(f.name()) ? FormPattern::meta(f.name())
                                             : FormPattern::atom(f.name());
    case Form::Kind::kSlash:
      return FormPattern::slash(pattern_from_form(f.left()), pattern_from_form(f.right()));
    case Form::Kind::kBackslash:
      return FormPattern::backslash(pattern_from_form(f.left()), pattern_from_form(f.right()));
    case Form::Kind::kDot:
      return FormPattern::dot(pattern_from_form(f.left()), pattern_from_form(f.right()));
  }
  return FormPattern::atom(f.name());
}

static TermPattern pattern_from_term(Term t) {
  if (t.is_comma()) {
    return TermPattern::comma(pattern_from_term(t.left()), pattern_from_term(t.right()));
  }
  Form f = t.form();
  if (f.is_atom() && is_metavariable_token(f.name())) return TermPattern::metavar(f.name());
  return TermPattern::one(pattern_from_form(f));
}

TermPattern parse_term_pattern(std::string_view text) {
  return pattern_from_term(parse_term(text));
}

FormPattern parse_form_pattern(std::string_view text) {
  return pattern_from_form(parse_category(text));
}

// Metavariables are rendered as atoms of the same name, so the text
// round-trips through parse_*_pattern.
static Form form_image(const FormPattern& p) {
  switch (p.kind) {
    case FormPattern::Kind::kMeta:
    case FormPattern::Kind::kAtom:
      return Form::atom(p.name);
    case FormPattern::Kind::kSlash:
      return Form::slash(form_image(p.args[0]), form_image(p.args[1]));
    case FormPattern::Kind::kBackslash:
      return Form::backslash(form_image(p.args[0]), form_image(p.args[1]));
    case FormPattern::Kind::kDot:
      return Form::dot(form_image(p.args[0]), form_image(p.args[1]));
  }
  return Form::atom(p.name);
}

static Term term_image(const TermPattern& p) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta:
      return Term::one(Form::atom(p.meta));
    case TermPattern::Kind::kLeaf:
      return Term::one(form_image(p.leaf[0]));
    case TermPattern::Kind::kComma:
      return Term::comma(term_image(p.args[0]), term_image(p.args[1]));
  }
  return Term::one(Form::atom(p.meta));
}

std::string render_pattern(const TermPattern& p) { return render_term(term_image(p)); }
std::string render_pattern(const FormPattern& p) { return render_category(form_image(p)); }

static void add_unique(std::vector<std::string>& out, const std::string& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

static void collect_form_metas(const FormPattern& p, std::vector<std::string>& out) {
  if (p.kind == FormPattern::Kind::kMeta) add_unique(out, p.name);
  for (const auto& a : p.args) collect_form_metas(a, out);
}

static void collect_metas(const TermPattern& p, std::vector<std::string>* terms,
                          std::vector<std::string>* forms) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta:
      if (terms) add_unique(*terms, p.meta);
      break;
    case TermPattern::Kind::kLeaf:
      if (forms) collect_form_metas(p.leaf[0], *forms);
      break;
    case TermPattern::Kind::kComma:
      for (const auto& a : p.args) collect_metas(a, terms, forms);
      break;
  }
}

std::vector<std::string> term_metavariables(const TermPattern& p) {
  std::vector<std::string> out;
  collect_metas(p, &out, nullptr);
  return out;
}

std::vector<std::string> form_metavariables(const TermPattern& p) {
  std::vector<std::string> out;
  collect_metas(p, nullptr, &out);
  return out;
}

std::vector<std::string> form_metavariables(const FormPattern& p) {
  std::vector<std::string> out;
  collect_form_metas(p, out);
  return out;
}

// ---- Extension ----

Extension::Extension(std::string name, std::vector<StructRule> rules, bool cond_cut)
    : name_(std::move(name)), rules_(std::move(rules)), cond_cut_(cond_cut) {
  ext_sub_ = std::all_of(rules_.begin(), rules_.end(), rule_preserves_subformulas);
}

const StructRule* Extension::find_rule(std::string_view name) const {
  for (const auto& r : rules_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

ExtensionRef make_extension(std::string name, std::vector<StructRule> rules, bool cond_cut) {
  return std::make_shared<const Extension>(std::move(name), std::move(rules), cond_cut);
}

ExtensionRef nl_sequent() {
  static const ExtensionRef e = make_extension("NL", {}, true);
  return e;
}

ExtensionRef l_sequent() {
  static const ExtensionRef e = make_extension(
      "L",
      {{"assocL", parse_term_pattern("(A, (B, C))"), parse_term_pattern("((A, B), C)")},
       {"assocR", parse_term_pattern("((A, B), C)"), parse_term_pattern("(A, (B, C))")}},
      true);
  return e;
}

ExtensionRef nlp_sequent() {
  static const ExtensionRef e = make_extension(
      "NLP", {{"comm", parse_term_pattern("(A, B)"), parse_term_pattern("(B, A)")}}, true);
  return e;
}

ExtensionRef lp_sequent() {
  static const ExtensionRef e = add_extension(*nlp_sequent(), *l_sequent(), "LP");
  return e;
}

ExtensionRef builtin_extension(std::string_view name) {
  if (name == "NL") return nl_sequent();
  if (name == "L") return l_sequent();
  if (name == "NLP") return nlp_sequent();
  if (name == "LP") return lp_sequent();
  return nullptr;
}

bool same_extension(const Extension& a, const Extension& b) {
  return &a == &b || (a.name() == b.name() && a.rules() == b.rules());
}

bool same_extension(const ExtensionRef& a, const ExtensionRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_extension(*a, *b);
}

bool rule_relates(const StructRule& r, Term d1, Term d2) {
  Bindings b;
  return match(r.lhs, d1, b) && match(r.rhs, d2, b);
}

bool ext_relates(const Extension& e, Term d1, Term d2) {
  return std::any_of(e.rules().begin(), e.rules().end(),
                     [&](const StructRule& r) { return rule_relates(r, d1, d2); });
}

template <typename Step>
static std::vector<Rewrite> rewrite_all(const Extension& e, Term t, Step step) {
  std::vector<Rewrite> out;
  if (e.empty()) return out;
  for_each_subterm(t, [&](const Path& p, Term sub) {
    for (const StructRule& r : e.rules()) {
      std::optional<Term> image = step(r, sub);
      if (!image) continue;
      Term result = replace_at(t, p, *image);
      bool seen =
          std::any_of(out.begin(), out.end(), [&](const Rewrite& w) { return w.result == result; });
      if (!seen) out.push_back({result, p, r.name});
    }
  });
  return out;
}

std::vector<Rewrite> ext_rewrites(const Extension& e, Term t) {
  return rewrite_all(e, t, [](const StructRule& r, Term sub) -> std::optional<Term> {
    Bindings b;
    if (!match(r.lhs, sub, b)) return std::nullopt;
    return instantiate(r.rhs, b);
  });
}

std::vector<Rewrite> ext_rewrites_backward(const Extension& e, Term t) {
  return rewrite_all(e, t, [](const StructRule& r, Term sub) -> std::optional<Term> {
    Bindings b;
    if (!match(r.rhs, sub, b)) return std::nullopt;
    return instantiate(r.lhs, b);
  });
}

// ---- subsumption: match a general pattern against a specific pattern,
// treating the specific pattern's metavariables as constants ----

namespace {

struct PatternBindings {
  std::map<std::string, TermPattern> terms;
  std::map<std::string, FormPattern> forms;
};

bool pmatch(const FormPattern& g, const FormPattern& s, PatternBindings& b) {
  if (g.kind == FormPattern::Kind::kMeta) {
    auto [it, inserted] = b.forms.emplace(g.name, s);
    return inserted || it->second == s;
  }
  if (g.kind != s.kind) return false;
  if (g.kind == FormPattern::Kind::kAtom) return g.name == s.name;
  return pmatch(g.args[0], s.args[0], b) && pmatch(g.args[1], s.args[1], b);
}

bool pmatch(const TermPattern& g, const TermPattern& s, PatternBindings& b) {
  if (g.kind == TermPattern::Kind::kMeta) {
    auto [it, inserted] = b.terms.emplace(g.meta, s);
    return inserted || it->second == s;
  }
  if (g.kind != s.kind) return false;
  if (g.kind == TermPattern::Kind::kLeaf) return pmatch(g.leaf[0], s.leaf[0], b);
  return pmatch(g.args[0], s.args[0], b) && pmatch(g.args[1], s.args[1], b);
}

bool pmatch(const ArrowRule& g, const ArrowRule& s) {
  PatternBindings b;
  return pmatch(g.lhs, s.lhs, b) && pmatch(g.rhs, s.rhs, b);
}

bool is_sub_pattern(const FormPattern& a, const FormPattern& b) {
  if (a == b) return true;
  return std::any_of(b.args.begin(), b.args.end(),
                     [&](const FormPattern& c) { return is_sub_pattern(a, c); });
}

void collect_leaves(const TermPattern& p, std::vector<const TermPattern*>& out) {
  if (p.kind == TermPattern::Kind::kComma) {
    collect_leaves(p.args[0], out);
    collect_leaves(p.args[1], out);
  } else {
    out.push_back(&p);
  }
}

}  // namespace

bool rule_subsumes(const StructRule& general, const StructRule& specific) {
  PatternBindings b;
  return pmatch(general.lhs, specific.lhs, b) && pmatch(general.rhs, specific.rhs, b);
}

bool extends_ext(const Extension& e1, const Extension& e2) {
  return std::all_of(e1.rules().begin(), e1.rules().end(), [&](const StructRule& r1) {
    return std::any_of(e2.rules().begin(), e2.rules().end(),
                       [&](const StructRule& r2) { return rule_subsumes(r2, r1); });
  });
}

ExtensionRef add_extension(const Extension& e1, const Extension& e2,
                           std::optional<std::string> name) {
  std::vector<StructRule> rules = e1.rules();
  for (const StructRule& r : e2.rules()) {
    if (std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(r);
  }
  std::string n;
  if (name) {
    n = *name;
  } else if (same_extension(e1, e2)) {
    n = e1.name();
  } else {
    n = e1.name() + "+" + e2.name();
  }
  return make_extension(std::move(n), std::move(rules), e1.cond_cut() && e2.cond_cut());
}

bool rule_preserves_subformulas(const StructRule& r) {
  std::vector<const TermPattern*> lhs_leaves, rhs_leaves;
  collect_leaves(r.lhs, lhs_leaves);
  collect_leaves(r.rhs, rhs_leaves);
  for (const TermPattern* l : lhs_leaves) {
    bool kept = std::any_of(rhs_leaves.begin(), rhs_leaves.end(), [&](const TermPattern* q) {
      if (l->kind == TermPattern::Kind::kMeta) {
        return q->kind == TermPattern::Kind::kMeta && q->meta == l->meta;
      }
      return q->kind == TermPattern::Kind::kLeaf && is_sub_pattern(l->leaf[0], q->leaf[0]);
    });
    if (!kept) return false;
  }
  return true;
}

bool extension_sub_ok(const Extension& e) {
  return std::all_of(e.rules().begin(), e.rules().end(), rule_preserves_subformulas);
}

// ---- arrow extensions ----

const ArrowRule* ArrowExtension::find_rule(std::string_view rule_name) const {
  for (const auto& r : rules) {
    if (r.name == rule_name) return &r;
  }
  return nullptr;
}

const ArrowExtension& arrow_nl() {
  static const ArrowExtension x{"NL", {}};
  return x;
}

const ArrowExtension& arrow_l() {
  static const ArrowExtension x{
      "L",
      {{"alfa", parse_form_pattern("A.(B.C)"), parse_form_pattern("A.B.C")},
       {"alfa'", parse_form_pattern("A.B.C"), parse_form_pattern("A.(B.C)")}}};
  return x;
}

const ArrowExtension& arrow_nlp() {
  static const ArrowExtension x{"NLP",
                                {{"pi", parse_form_pattern("A.B"), parse_form_pattern("B.A")}}};
  return x;
}

const ArrowExtension& arrow_lp() {
  static const ArrowExtension x = [] {
    ArrowExtension u{"LP", arrow_nlp().rules};
    for (const auto& r : arrow_l().rules) u.rules.push_back(r);
    return u;
  }();
  return x;
}

const ArrowExtension* builtin_arrow_extension(std::string_view name) {
  if (name == "NL") return &arrow_nl();
  if (name == "L") return &arrow_l();
  if (name == "NLP") return &arrow_nlp();
  if (name == "LP") return &arrow_lp();
  return nullptr;
}

bool arrow_rule_relates(const ArrowRule& r, Form a, Form b) {
  Bindings bind;
  return match(r.lhs, a, bind) && match(r.rhs, b, bind);
}

bool arrow_relates(const ArrowExtension& x, Form a, Form b) {
  return std::any_of(x.rules.begin(), x.rules.end(),
                     [&](const ArrowRule& r) { return arrow_rule_relates(r, a, b); });
}

bool arrow_extends(const ArrowExtension& x1, const ArrowExtension& x2) {
  return std::all_of(x1.rules.begin(), x1.rules.end(), [&](const ArrowRule& r1) {
    return std::any_of(x2.rules.begin(), x2.rules.end(),
                       [&](const ArrowRule& r2) { return pmatch(r2, r1); });
  });
}

FormPattern delta_pattern(const TermPattern& p) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta:
      return FormPattern::meta(p.meta);
    case TermPattern::Kind::kLeaf:
      return p.leaf[0];
    case TermPattern::Kind::kComma:
      return FormPattern::dot(delta_pattern(p.args[0]), delta_pattern(p.args[1]));
  }
  return FormPattern::meta(p.meta);
}

}  // namespace lambek
