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

#include "lambek/natded.hpp"

#include "lambek/term_replace.hpp"

namespace lambek {

namespace {

using Kind = NatDedNode::Kind;

NatDedNode make(Kind k, Term ante, Form succ, std::vector<NatDedNode> children = {}) {
  return {k, ante, succ, std::move(children), std::nullopt, std::nullopt, {}};
}

std::string sequent_text(Term t, Form f) { return render_term(t) + " |- " + render_category(f); }

[[noreturn]] void bad(const char* rule, const NatDedNode& p, const char* want) {
  throw PreconditionError(std::string(rule) + ": premise " + sequent_text(p.ante, p.succ) +
                          " is not of the form " + want);
}

}  // namespace

NatDedNode NatDedNode::axiom(Form a) { return make(Kind::kNatAxiom, Term::one(a), a); }

NatDedNode NatDedNode::slash_intro(NatDedNode p) {
  if (!p.ante.is_comma() || !p.ante.right().is_one()) bad("SlashIntro", p, "(Gamma, B) |- A");
  Term gamma = p.ante.left();
  Form f = Form::slash(p.succ, p.ante.right().form());
  return make(Kind::kSlashIntro, gamma, f, {std::move(p)});
}

NatDedNode NatDedNode::backslash_intro(NatDedNode p) {
  if (!p.ante.is_comma() || !p.ante.left().is_one()) bad("BackslashIntro", p, "(B, Gamma) |- A");
  Term gamma = p.ante.right();
  Form f = Form::backslash(p.ante.left().form(), p.succ);
  return make(Kind::kBackslashIntro, gamma, f, {std::move(p)});
}

NatDedNode NatDedNode::dot_intro(NatDedNode p, NatDedNode q) {
  Term t = Term::comma(p.ante, q.ante);
  Form f = Form::dot(p.succ, q.succ);
  return make(Kind::kDotIntro, t, f, {std::move(p), std::move(q)});
}

NatDedNode NatDedNode::slash_elim(NatDedNode p, NatDedNode q) {
  if (p.succ.kind() != Form::Kind::kSlash || p.succ.den() != q.succ) {
    bad("SlashElim", p, "Gamma |- A/B with B the second premise's succedent");
  }
  Term t = Term::comma(p.ante, q.ante);
  Form a = p.succ.num();
  Form b = q.succ;
  NatDedNode n = make(Kind::kSlashElim, t, a, {std::move(p), std::move(q)});
  n.b = b;
  return n;
}

NatDedNode NatDedNode::backslash_elim(NatDedNode p, NatDedNode q) {
  if (q.succ.kind() != Form::Kind::kBackslash || q.succ.den() != p.succ) {
    bad("BackslashElim", q, "Delta |- B\\A with B the first premise's succedent");
  }
  Term t = Term::comma(p.ante, q.ante);
  Form a = q.succ.num();
  Form b = p.succ;
  NatDedNode n = make(Kind::kBackslashElim, t, a, {std::move(p), std::move(q)});
  n.b = b;
  return n;
}

NatDedNode NatDedNode::dot_elim(NatDedNode p, NatDedNode q, Path at) {
  if (p.succ.kind() != Form::Kind::kDot) bad("DotElim", p, "Delta |- A.B");
  Term pair = Term::comma(Term::one(p.succ.left()), Term::one(p.succ.right()));
  if (!is_valid_path(q.ante, at) || subterm_at(q.ante, at) != pair) {
    bad("DotElim", q, "Gamma |- C with (A, B) at the given path");
  }
  Term t = replace_at(q.ante, at, p.ante);
  Form c = q.succ;
  NatDedNode n = make(Kind::kDotElim, t, c, {std::move(p), std::move(q)});
  n.path = at;
  return n;
}

NatDedNode NatDedNode::nat_ext(NatDedNode p, Path at, Term delta_prime, std::string rule) {
  if (!is_valid_path(p.ante, at)) bad("NatExt", p, "a sequent containing the given path");
  Term t = replace_at(p.ante, at, delta_prime);
  Form c = p.succ;
  NatDedNode n = make(Kind::kNatExt, t, c, {std::move(p)});
  n.path = at;
  n.rule = std::move(rule);
  return n;
}

const char* to_string(NatDedNode::Kind k) {
  switch (k) {
    case Kind::kNatAxiom:
      return "NatAxiom";
    case Kind::kSlashIntro:
      return "SlashIntro";
    case Kind::kBackslashIntro:
      return "BackslashIntro";
    case Kind::kDotIntro:
      return "DotIntro";
    case Kind::kSlashElim:
      return "SlashElim";
    case Kind::kBackslashElim:
      return "BackslashElim";
    case Kind::kDotElim:
      return "DotElim";
    case Kind::kNatExt:
      return "NatExt";
  }
  return "?";
}

std::optional<NatDedNode::Kind> parse_natded_kind(std::string_view text) {
  for (Kind k : {Kind::kNatAxiom, Kind::kSlashIntro, Kind::kBackslashIntro, Kind::kDotIntro,
                 Kind::kSlashElim, Kind::kBackslashElim, Kind::kDotElim, Kind::kNatExt}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

// ---- checking ----

namespace {

std::size_t arity(Kind k) {
  switch (k) {
    case Kind::kNatAxiom:
      return 0;
    case Kind::kSlashIntro:
    case Kind::kBackslashIntro:
    case Kind::kNatExt:
      return 1;
    default:
      return 2;
  }
}

std::optional<std::string> check_local(const Extension* e, const NatDedNode& n) {
  const std::string name = to_string(n.kind);
  if (n.children.size() != arity(n.kind)) {
    return name + " takes " + std::to_string(arity(n.kind)) + " premise(s), got " +
           std::to_string(n.children.size());
  }
  switch (n.kind) {
    case Kind::kNatAxiom:
      if (!n.ante.is_one() || n.ante.form() != n.succ) {
        return name + ": antecedent is not the single succedent formula";
      }
      return std::nullopt;
    case Kind::kSlashIntro:
    case Kind::kBackslashIntro: {
      bool slash = n.kind == Kind::kSlashIntro;
      if (n.succ.kind() != (slash ? Form::Kind::kSlash : Form::Kind::kBackslash)) {
        return name + ": succedent has the wrong connective";
      }
      const NatDedNode& c = n.children[0];
      Term b = Term::one(n.succ.den());
      Term want = slash ? Term::comma(n.ante, b) : Term::comma(b, n.ante);
      if (c.ante != want || c.succ != n.succ.num()) {
        return name + ": premise must be " + sequent_text(want, n.succ.num());
      }
      return std::nullopt;
    }
    case Kind::kDotIntro: {
      const NatDedNode& l = n.children[0];
      const NatDedNode& r = n.children[1];
      if (n.ante != Term::comma(l.ante, r.ante) || n.succ != Form::dot(l.succ, r.succ)) {
        return name + ": conclusion is not (Gamma, Delta) |- A.B of the premises";
      }
      return std::nullopt;
    }
    case Kind::kSlashElim:
    case Kind::kBackslashElim: {
      bool slash = n.kind == Kind::kSlashElim;
      const NatDedNode& l = n.children[0];
      const NatDedNode& r = n.children[1];
      if (n.ante != Term::comma(l.ante, r.ante)) {
        return name + ": antecedent is not (Gamma, Delta) of the premises";
      }
      const NatDedNode& fn = slash ? l : r;
      const NatDedNode& arg = slash ? r : l;
      Form want = slash ? Form::slash(n.succ, arg.succ) : Form::backslash(arg.succ, n.succ);
      if (fn.succ != want) {
        return name + ": functor premise must conclude " + render_category(want);
      }
      if (n.b && *n.b != arg.succ) {
        return name + ": recorded B " + render_category(*n.b) + " differs from the premise's " +
               render_category(arg.succ);
      }
      return std::nullopt;
    }
    case Kind::kDotElim: {
      const NatDedNode& d = n.children[0];
      const NatDedNode& g = n.children[1];
      if (g.succ != n.succ) return name + ": second premise succedent differs";
      if (d.succ.kind() != Form::Kind::kDot) return name + ": first premise does not conclude A.B";
      Term pair = Term::comma(Term::one(d.succ.left()), Term::one(d.succ.right()));
      auto fits = [&](const Path& p) {
        return is_valid_path(g.ante, p) && subterm_at(g.ante, p) == pair &&
               replace_at(g.ante, p, d.ante) == n.ante;
      };
      if (n.path) {
        if (!fits(*n.path))
          return name + ": recorded path " + n.path->to_string() + " does not fit";
        return std::nullopt;
      }
      for (const Path& p : occurrences(g.ante, pair)) {
        if (fits(p)) return std::nullopt;
      }
      return name + ": no occurrence of (A, B) whose replacement by Delta gives the conclusion";
    }
    case Kind::kNatExt: {
      const NatDedNode& c = n.children[0];
      if (c.succ != n.succ) return name + ": premise succedent differs";
      if (!e) return name + ": proof has no extension";
      auto fits = [&](const Path& p) {
        if (!is_valid_path(c.ante, p) || !is_valid_path(n.ante, p)) return false;
        Term before = subterm_at(c.ante, p);
        Term after = subterm_at(n.ante, p);
        if (replace_at(c.ante, p, after) != n.ante) return false;
        if (n.rule.empty()) return ext_relates(*e, before, after);
        const StructRule* r = e->find_rule(n.rule);
        return r && rule_relates(*r, before, after);
      };
      if (n.path) {
        if (!fits(*n.path))
          return name + ": recorded path " + n.path->to_string() + " does not fit";
        return std::nullopt;
      }
      for (const Path& p : all_paths(n.ante)) {
        if (fits(p)) return std::nullopt;
      }
      return name + ": no subterm pair related by extension " + e->name();
    }
  }
  return std::string("unknown node kind");
}

bool check_tree(const Extension* e, const NatDedNode& n, std::vector<std::size_t>& at,
                CheckError& err) {
  if (auto msg = check_local(e, n)) {
    err.kind = msg->find("premise(s)") != std::string::npos ? CheckErrorKind::kArity
                                                            : CheckErrorKind::kRuleMismatch;
    err.message = *msg + " in " + sequent_text(n.ante, n.succ);
    err.tree_path = at;
    return false;
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    at.push_back(i);
    if (!check_tree(e, n.children[i], at, err)) return false;
    at.pop_back();
  }
  return true;
}

}  // namespace

Status check_natded_proof(const NatDedProof& p) {
  std::vector<std::size_t> at;
  CheckError err;
  if (!check_tree(p.ext.get(), p.root, at, err)) return err;
  return Ok{};
}

}  // namespace lambek
