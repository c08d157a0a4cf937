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

#include "lambek/dertree.hpp"

#include <algorithm>

#include "lambek/term_replace.hpp"

namespace lambek {

std::string Sequent::to_string() const {
  return render_term(ante) + " |- " + render_category(succ);
}

Sequent make_sequent(ExtensionRef ext, Term ante, Form succ) {
  return {std::move(ext), ante, succ};
}

Sequent parse_sequent(ExtensionRef ext, std::string_view text) {
  std::size_t bar = text.find("|-");
  if (bar == std::string_view::npos) {
    throw SyntaxError("sequent \"" + std::string(text) + "\" has no \"|-\"", 0);
  }
  if (text.find("|-", bar + 2) != std::string_view::npos) {
    throw SyntaxError("sequent \"" + std::string(text) + "\" has more than one \"|-\"", bar);
  }
  Term ante = parse_term(text.substr(0, bar));
  Form succ = parse_category(text.substr(bar + 2));
  return {std::move(ext), ante, succ};
}

const char* to_string(RuleName r) {
  switch (r) {
    case RuleName::kSeqAxiom:
      return "SeqAxiom";
    case RuleName::kRightSlash:
      return "RightSlash";
    case RuleName::kRightBackslash:
      return "RightBackslash";
    case RuleName::kRightDot:
      return "RightDot";
    case RuleName::kLeftSlash:
      return "LeftSlash";
    case RuleName::kLeftBackslash:
      return "LeftBackslash";
    case RuleName::kLeftDot:
      return "LeftDot";
    case RuleName::kCutRule:
      return "CutRule";
    case RuleName::kSeqExt:
      return "SeqExt";
  }
  return "?";
}

std::optional<RuleName> parse_rule_name(std::string_view text) {
  for (RuleName r : kAllRules) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

std::size_t rule_arity(RuleName r) {
  switch (r) {
    case RuleName::kSeqAxiom:
      return 0;
    case RuleName::kRightSlash:
    case RuleName::kRightBackslash:
    case RuleName::kLeftDot:
    case RuleName::kSeqExt:
      return 1;
    default:
      return 2;
  }
}

// ---- measures ----

int degree_proof(const Dertree& d) {
  if (d.is_unf()) {
    throw UnfinishedProofError("degree_proof: unfinished leaf " + d.seq.to_string());
  }
  int deg = 0;
  for (const Dertree& c : d.children) deg = std::max(deg, degree_proof(c));
  if (*d.rule == RuleName::kCutRule && !d.children.empty()) {
    deg = std::max(deg, degree_formula(concl(d.children[0])));
  }
  return deg;
}

bool is_cut_free(const Dertree& d) { return degree_proof(d) == 0; }

bool is_complete(const Dertree& d) {
  if (d.is_unf()) return false;
  return std::all_of(d.children.begin(), d.children.end(),
                     [](const Dertree& c) { return is_complete(c); });
}

std::size_t node_count(const Dertree& d) {
  std::size_t n = 1;
  for (const Dertree& c : d.children) n += node_count(c);
  return n;
}

std::size_t tree_depth(const Dertree& d) {
  if (d.is_unf()) return 0;
  std::size_t deepest = 0;
  for (const Dertree& c : d.children) deepest = std::max(deepest, tree_depth(c));
  return deepest + 1;
}

// ---- node checking ----

namespace {

CheckError mismatch(RuleName r, const std::string& what) {
  return {CheckErrorKind::kRuleMismatch, std::string(to_string(r)) + ": " + what, {}};
}

Result<RuleWitness> check_left(const Dertree& d, RuleName r) {
  const Sequent& s = d.seq;
  const Sequent& main = d.children[0].seq;
  const Sequent& side = d.children[1].seq;
  if (main.succ != s.succ) return mismatch(r, "first premise succedent differs from conclusion");
  bool slash = r == RuleName::kLeftSlash;
  Form b = side.succ;
  Term delta = side.ante;
  std::optional<RuleWitness> found;
  bool shape_seen = false;
  for_each_subterm(s.ante, [&](const Path& p, Term sub) {
    if (found || !sub.is_comma()) return;
    Term fn = slash ? sub.left() : sub.right();
    Term arg = slash ? sub.right() : sub.left();
    if (!fn.is_one() || arg != delta) return;
    Form f = fn.form();
    if (f.kind() != (slash ? Form::Kind::kSlash : Form::Kind::kBackslash) || f.den() != b) return;
    shape_seen = true;
    if (replace_at(s.ante, p, Term::one(f.num())) != main.ante) return;
    RuleWitness w;
    w.rule = r;
    w.path = p;
    w.a = f.num();
    w.b = b;
    w.delta = delta;
    found = w;
  });
  if (found) return *found;
  if (!shape_seen) {
    return mismatch(r, std::string("no occurrence of ") +
                           (slash ? "(A/B, Delta)" : "(Delta, B\\A)") +
                           " with B and Delta from the second premise");
  }
  return mismatch(r,
                  "first premise is not the conclusion with the functor occurrence replaced by A");
}

Result<RuleWitness> check_node_impl(const Dertree& d) {
  if (d.is_unf()) {
    return CheckError{CheckErrorKind::kUnfinished, "unfinished leaf " + d.seq.to_string(), {}};
  }
  RuleName r = *d.rule;
  if (d.children.size() != rule_arity(r)) {
    return CheckError{CheckErrorKind::kArity,
                      std::string(to_string(r)) + " takes " + std::to_string(rule_arity(r)) +
                          " premise(s), got " + std::to_string(d.children.size()),
                      {}};
  }
  for (const Dertree& c : d.children) {
    if (!same_extension(c.seq.ext, d.seq.ext)) {
      return CheckError{CheckErrorKind::kExtensionMismatch,
                        std::string(to_string(r)) + ": premise extension differs from conclusion",
                        {}};
    }
  }
  const Sequent& s = d.seq;
  RuleWitness w;
  w.rule = r;
  switch (r) {
    case RuleName::kSeqAxiom:
      if (!s.ante.is_one() || s.ante.form() != s.succ) {
        return mismatch(r, "antecedent is not the single succedent formula");
      }
      return w;
    case RuleName::kRightSlash:
    case RuleName::kRightBackslash: {
      bool slash = r == RuleName::kRightSlash;
      if (s.succ.kind() != (slash ? Form::Kind::kSlash : Form::Kind::kBackslash)) {
        return mismatch(r, std::string("succedent is not a ") + (slash ? "slash" : "backslash"));
      }
      Form a = s.succ.num();
      Form b = s.succ.den();
      const Sequent& c = d.children[0].seq;
      Term expect = slash ? Term::comma(s.ante, Term::one(b)) : Term::comma(Term::one(b), s.ante);
      if (c.ante != expect) {
        return mismatch(
            r, std::string("premise antecedent must be ") + (slash ? "(Gamma, B)" : "(B, Gamma)"));
      }
      if (c.succ != a) return mismatch(r, "premise succedent must be A");
      w.a = a;
      w.b = b;
      return w;
    }
    case RuleName::kRightDot: {
      if (s.succ.kind() != Form::Kind::kDot) return mismatch(r, "succedent is not a product");
      if (!s.ante.is_comma()) return mismatch(r, "antecedent is not a comma");
      const Sequent& c0 = d.children[0].seq;
      const Sequent& c1 = d.children[1].seq;
      if (c0.ante != s.ante.left() || c0.succ != s.succ.left()) {
        return mismatch(r, "first premise must be Gamma |- A");
      }
      if (c1.ante != s.ante.right() || c1.succ != s.succ.right()) {
        return mismatch(r, "second premise must be Delta |- B");
      }
      w.a = s.succ.left();
      w.b = s.succ.right();
      return w;
    }
    case RuleName::kLeftSlash:
    case RuleName::kLeftBackslash:
      return check_left(d, r);
    case RuleName::kLeftDot: {
      const Sequent& c = d.children[0].seq;
      if (c.succ != s.succ) return mismatch(r, "premise succedent differs from conclusion");
      std::optional<RuleWitness> found;
      for_each_subterm(s.ante, [&](const Path& p, Term sub) {
        if (found || !sub.is_one() || sub.form().kind() != Form::Kind::kDot) return;
        Form f = sub.form();
        Term split = Term::comma(Term::one(f.left()), Term::one(f.right()));
        if (replace_at(s.ante, p, split) != c.ante) return;
        RuleWitness hit = w;
        hit.path = p;
        hit.a = f.left();
        hit.b = f.right();
        found = hit;
      });
      if (found) return *found;
      return mismatch(r, "no product occurrence whose split gives the premise antecedent");
    }
    case RuleName::kCutRule: {
      const Sequent& main = d.children[0].seq;
      const Sequent& side = d.children[1].seq;
      if (main.succ != s.succ)
        return mismatch(r, "first premise succedent differs from conclusion");
      Term cut = Term::one(side.succ);
      std::optional<RuleWitness> found;
      for_each_subterm(s.ante, [&](const Path& p, Term sub) {
        if (found || sub != side.ante) return;
        if (replace_at(s.ante, p, cut) != main.ante) return;
        RuleWitness hit = w;
        hit.path = p;
        hit.a = side.succ;
        hit.delta = side.ante;
        found = hit;
      });
      if (found) return *found;
      return mismatch(r, "no occurrence of Delta whose replacement by A gives the first premise");
    }
    case RuleName::kSeqExt: {
      const Sequent& c = d.children[0].seq;
      if (c.succ != s.succ) return mismatch(r, "premise succedent differs from conclusion");
      if (!s.ext) return mismatch(r, "sequent has no extension");
      std::optional<RuleWitness> found;
      for_each_subterm(s.ante, [&](const Path& p, Term sub) {
        if (found || !is_valid_path(c.ante, p)) return;
        Term before = subterm_at(c.ante, p);
        if (replace_at(c.ante, p, sub) != s.ante) return;
        for (const StructRule& rule : s.ext->rules()) {
          if (!rule_relates(rule, before, sub)) continue;
          RuleWitness hit = w;
          hit.path = p;
          hit.delta = before;
          hit.delta_prime = sub;
          hit.ext_rule = rule.name;
          found = hit;
          return;
        }
      });
      if (found) return *found;
      return mismatch(r, "no subterm pair related by extension " + s.ext->name());
    }
  }
  return mismatch(r, "unknown rule");
}

bool check_tree(const Dertree& d, std::vector<std::size_t>& at, std::vector<RuleWitness>& out,
                CheckError& err) {
  Result<RuleWitness> w = check_node_impl(d);
  if (!w.ok()) {
    err = w.error();
    err.tree_path = at;
    if (err.kind != CheckErrorKind::kUnfinished) err.message += " in " + d.seq.to_string();
    return false;
  }
  out.push_back(*w);
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    at.push_back(i);
    if (!check_tree(d.children[i], at, out, err)) return false;
    at.pop_back();
  }
  return true;
}

}  // namespace

Result<RuleWitness> check_node(const Dertree& d) { return check_node_impl(d); }

Result<std::vector<RuleWitness>> check_proof(const Dertree& d) {
  std::vector<std::size_t> at;
  std::vector<RuleWitness> out;
  CheckError err;
  if (!check_tree(d, at, out, err)) return err;
  return out;
}

// ---- expansions ----

std::vector<Expansion> rule_expansions(const Extension& e, Term ante, Form succ, RuleName rule,
                                       const std::vector<Form>& cut_candidates) {
  std::vector<Expansion> out;
  switch (rule) {
    case RuleName::kSeqAxiom:
      if (ante.is_one() && ante.form() == succ) out.push_back({rule, {}});
      break;
    case RuleName::kRightSlash:
      if (succ.kind() == Form::Kind::kSlash) {
        out.push_back({rule, {{Term::comma(ante, Term::one(succ.den())), succ.num()}}});
      }
      break;
    case RuleName::kRightBackslash:
      if (succ.kind() == Form::Kind::kBackslash) {
        out.push_back({rule, {{Term::comma(Term::one(succ.den()), ante), succ.num()}}});
      }
      break;
    case RuleName::kRightDot:
      if (succ.kind() == Form::Kind::kDot && ante.is_comma()) {
        out.push_back({rule, {{ante.left(), succ.left()}, {ante.right(), succ.right()}}});
      }
      break;
    case RuleName::kLeftSlash:
    case RuleName::kLeftBackslash: {
      bool slash = rule == RuleName::kLeftSlash;
      for_each_subterm(ante, [&](const Path& p, Term sub) {
        if (!sub.is_comma()) return;
        Term fn = slash ? sub.left() : sub.right();
        Term arg = slash ? sub.right() : sub.left();
        if (!fn.is_one()) return;
        Form f = fn.form();
        if (f.kind() != (slash ? Form::Kind::kSlash : Form::Kind::kBackslash)) return;
        out.push_back({rule, {{replace_at(ante, p, Term::one(f.num())), succ}, {arg, f.den()}}});
      });
      break;
    }
    case RuleName::kLeftDot:
      for_each_subterm(ante, [&](const Path& p, Term sub) {
        if (!sub.is_one() || sub.form().kind() != Form::Kind::kDot) return;
        Form f = sub.form();
        Term split = Term::comma(Term::one(f.left()), Term::one(f.right()));
        out.push_back({rule, {{replace_at(ante, p, split), succ}}});
      });
      break;
    case RuleName::kCutRule:
      for (Form a : cut_candidates) {
        for_each_subterm(ante, [&](const Path& p, Term sub) {
          out.push_back({rule, {{replace_at(ante, p, Term::one(a)), succ}, {sub, a}}});
        });
      }
      break;
    case RuleName::kSeqExt:
      for (const Rewrite& w : ext_rewrites_backward(e, ante)) {
        out.push_back({rule, {{w.result, succ}}});
      }
      break;
  }
  return out;
}

std::vector<Dertree> expansions(const Sequent& s, bool allow_cut,
                                const std::vector<Form>& cut_candidates) {
  static const Extension kNone("", {}, true);
  const Extension& e = s.ext ? *s.ext : kNone;
  std::vector<Dertree> out;
  for (RuleName r : kAllRules) {
    if (r == RuleName::kCutRule && !allow_cut) continue;
    for (const Expansion& x : rule_expansions(e, s.ante, s.succ, r, cut_candidates)) {
      std::vector<Dertree> kids;
      kids.reserve(x.premises.size());
      for (const Premise& p : x.premises) kids.push_back(Dertree::unf({s.ext, p.ante, p.succ}));
      out.push_back(Dertree::der(s, r, std::move(kids)));
    }
  }
  return out;
}

// ---- sub-proofs and the sub-formula property ----

bool is_subproof_one(const Dertree& q, const Dertree& p) {
  if (p.is_unf()) return false;
  bool child =
      std::any_of(p.children.begin(), p.children.end(), [&](const Dertree& c) { return c == q; });
  return child && check_node(p).ok();
}

bool is_subproof(const Dertree& q, const Dertree& p) {
  if (q == p) return true;
  return std::any_of(p.children.begin(), p.children.end(),
                     [&](const Dertree& c) { return is_subproof(q, c) && is_subproof_one(c, p); });
}

static void collect_subtrees(const Dertree& d, std::vector<const Dertree*>& out) {
  out.push_back(&d);
  for (const Dertree& c : d.children) collect_subtrees(c, out);
}

std::vector<const Dertree*> subtrees(const Dertree& d) {
  std::vector<const Dertree*> out;
  collect_subtrees(d, out);
  return out;
}

bool check_subformula_property(const Dertree& q, const Dertree& p) {
  if (!is_subproof(q, p)) {
    throw PreconditionError("check_subformula_property: q is not a subproof of p");
  }
  if (!exten(p) || !extension_sub_ok(*exten(p))) {
    throw PreconditionError("check_subformula_property: extension of p fails extension_sub_ok");
  }
  if (!is_cut_free(p)) {
    throw PreconditionError("check_subformula_property: p is not cut free");
  }
  std::vector<Form> xs = sub_formulas(prems(q));
  for (Form f : sub_formulas(concl(q))) xs.push_back(f);
  return std::all_of(xs.begin(), xs.end(), [&](Form x) {
    return is_sub_form_term(x, prems(p)) || is_sub_formula(x, concl(p));
  });
}

// ---- refinement ----

// Every Der node of `d` is a valid one-step expansion of its sequent.
static bool grown_from(const Dertree& d) {
  if (d.is_unf()) return true;
  if (!check_node(d).ok()) return false;
  return std::all_of(d.children.begin(), d.children.end(),
                     [](const Dertree& c) { return grown_from(c); });
}

bool refines(const Dertree& d1, const Dertree& d2) {
  if (d1.is_unf()) return d2.seq == d1.seq && grown_from(d2);
  if (d2.is_unf() || d1.seq != d2.seq || d1.rule != d2.rule) return false;
  if (d1.children.size() != d2.children.size()) return false;
  // The structure rules only descend into one- and two-premise nodes.
  if (d1.children.size() > 2) return d1 == d2;
  for (std::size_t i = 0; i < d1.children.size(); ++i) {
    if (!refines(d1.children[i], d2.children[i])) return false;
  }
  return true;
}

}  // namespace lambek
