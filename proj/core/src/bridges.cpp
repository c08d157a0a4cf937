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

#include <map>

#include "lambek/search.hpp"
#include "lambek/term_replace.hpp"

namespace lambek {

ArrowExtension to_arrow_ext(const Extension& e) {
  ArrowExtension x{e.name(), {}};
  for (const StructRule& r : e.rules()) {
    x.rules.push_back({r.name, delta_pattern(r.rhs), delta_pattern(r.lhs)});
  }
  return x;
}

// ---- sequent calculus to arrows ----

namespace {

// An arrow delta(t) -> delta(t[p := OneForm(q.target)]) from q, which
// proves delta(t at p) -> q.target.
ArrowProof lift(Term t, const Path& p, std::size_t i, ArrowProof q) {
  if (i == p.size()) return q;
  if (p.steps[i] == Dir::kLeft) {
    return mono_dot_left(lift(t.left(), p, i + 1, std::move(q)), delta_translation(t.right()));
  }
  return mono_dot_right(delta_translation(t.left()), lift(t.right(), p, i + 1, std::move(q)));
}

ArrowProof translate(const Dertree& d, const std::vector<RuleWitness>& ws, std::size_t& next) {
  const RuleWitness& w = ws[next++];
  std::vector<ArrowProof> kids;
  for (const Dertree& c : d.children) kids.push_back(translate(c, ws, next));
  Term ante = d.seq.ante;
  switch (w.rule) {
    case RuleName::kSeqAxiom:
      return ArrowProof::one(d.seq.succ);
    case RuleName::kRightSlash:
      return ArrowProof::beta(std::move(kids[0]));
    case RuleName::kRightBackslash:
      return ArrowProof::gamma(std::move(kids[0]));
    case RuleName::kRightDot:
      return mono_dot(std::move(kids[0]), std::move(kids[1]));
    case RuleName::kLeftSlash: {
      Form fn = Form::slash(*w.a, *w.b);
      ArrowProof q = ArrowProof::comp(mono_dot_right(fn, std::move(kids[1])),
                                      ArrowProof::beta_inv(ArrowProof::one(fn)));
      return ArrowProof::comp(lift(ante, *w.path, 0, std::move(q)), std::move(kids[0]));
    }
    case RuleName::kLeftBackslash: {
      Form fn = Form::backslash(*w.b, *w.a);
      ArrowProof q = ArrowProof::comp(mono_dot_left(std::move(kids[1]), fn),
                                      ArrowProof::gamma_inv(ArrowProof::one(fn)));
      return ArrowProof::comp(lift(ante, *w.path, 0, std::move(q)), std::move(kids[0]));
    }
    case RuleName::kLeftDot:
      return std::move(kids[0]);
    case RuleName::kCutRule:
      return ArrowProof::comp(lift(ante, *w.path, 0, std::move(kids[1])), std::move(kids[0]));
    case RuleName::kSeqExt: {
      ArrowProof step = ArrowProof::ext(w.ext_rule, delta_translation(*w.delta_prime),
                                        delta_translation(*w.delta));
      return ArrowProof::comp(lift(ante, *w.path, 0, std::move(step)), std::move(kids[0]));
    }
  }
  throw LambekError("gentzen_to_arrow: unknown rule");
}

}  // namespace

Result<ArrowProof> gentzen_to_arrow(const Dertree& d) {
  Result<std::vector<RuleWitness>> checked = check_proof(d);
  if (!checked.ok()) return checked.error();
  std::size_t next = 0;
  return translate(d, *checked, next);
}

// ---- arrows to the sequent calculus ----

namespace {

class ArrowLowering {
 public:
  ArrowLowering(const ExtensionRef& e, const ObligationSolver& solver) : e_(e), solver_(solver) {}

  Dertree lower(const ArrowProof& p) {
    using Kind = ArrowProof::Kind;
    switch (p.kind) {
      case Kind::kOne:
        return axiom(p.source);
      case Kind::kBeta:
      case Kind::kGamma: {
        // A.B |- C gives (A, B) |- C, then the right rule.
        const ArrowProof& c = p.children[0];
        Form a = c.source.left();
        Form b = c.source.right();
        Dertree split = unpack_dot(lower(c), a, b);
        RuleName r = p.kind == Kind::kBeta ? RuleName::kRightSlash : RuleName::kRightBackslash;
        return der(Term::one(p.source), p.target, r, {std::move(split)});
      }
      case Kind::kBetaInv:
      case Kind::kGammaInv: {
        bool beta = p.kind == Kind::kBetaInv;
        const ArrowProof& c = p.children[0];
        Form a = p.source.left();
        Form b = p.source.right();
        Dertree inner = lower(c);
        Dertree body = beta ? unpack_slash(std::move(inner), a, b, p.target)
                            : unpack_backslash(std::move(inner), a, b, p.target);
        return der(Term::one(p.source), p.target, RuleName::kLeftDot, {std::move(body)});
      }
      case Kind::kComp: {
        Dertree left = lower(p.children[0]);
        Dertree right = lower(p.children[1]);
        return der(Term::one(p.source), p.target, RuleName::kCutRule,
                   {std::move(right), std::move(left)});
      }
      case Kind::kExt:
        return obligation(p.source, p.target);
    }
    throw LambekError("arrow_to_gentzen: unknown node kind");
  }

  const std::vector<std::pair<Form, Form>>& unsolved() const { return unsolved_; }

 private:
  Dertree der(Term ante, Form succ, RuleName r, std::vector<Dertree> kids = {}) {
    return Dertree::der({e_, ante, succ}, r, std::move(kids));
  }
  Dertree axiom(Form a) { return der(Term::one(a), a, RuleName::kSeqAxiom); }

  // From OneForm(A.B) |- C to (A, B) |- C.
  Dertree unpack_dot(Dertree t, Form a, Form b) {
    Term pair = Term::comma(Term::one(a), Term::one(b));
    if (t.rule == RuleName::kLeftDot && t.children[0].seq.ante == pair) {
      return std::move(t.children[0]);
    }
    Form c = t.seq.succ;
    Form ab = Form::dot(a, b);
    Dertree intro = der(pair, ab, RuleName::kRightDot, {axiom(a), axiom(b)});
    return der(pair, c, RuleName::kCutRule, {std::move(t), std::move(intro)});
  }

  // From OneForm(A) |- C/B to (A, B) |- C.
  Dertree unpack_slash(Dertree t, Form a, Form b, Form c) {
    Term pair = Term::comma(Term::one(a), Term::one(b));
    if (t.rule == RuleName::kRightSlash && t.children[0].seq.ante == pair) {
      return std::move(t.children[0]);
    }
    Form cb = Form::slash(c, b);
    Term apply_ante = Term::comma(Term::one(cb), Term::one(b));
    Dertree apply = der(apply_ante, c, RuleName::kLeftSlash, {axiom(c), axiom(b)});
    return der(pair, c, RuleName::kCutRule, {std::move(apply), std::move(t)});
  }

  // From OneForm(B) |- A\C to (A, B) |- C.
  Dertree unpack_backslash(Dertree t, Form a, Form b, Form c) {
    Term pair = Term::comma(Term::one(a), Term::one(b));
    if (t.rule == RuleName::kRightBackslash && t.children[0].seq.ante == pair) {
      return std::move(t.children[0]);
    }
    Form ac = Form::backslash(a, c);
    Term apply_ante = Term::comma(Term::one(a), Term::one(ac));
    Dertree apply = der(apply_ante, c, RuleName::kLeftBackslash, {axiom(c), axiom(a)});
    return der(pair, c, RuleName::kCutRule, {std::move(apply), std::move(t)});
  }

  Dertree obligation(Form a, Form b) {
    auto key = std::make_pair(a.hash(), b.hash());
    auto it = solved_.find(key);
    if (it != solved_.end()) {
      for (const auto& [fa, fb, proof] : it->second) {
        if (fa == a && fb == b) {
          if (proof) return *proof;
          return Dertree::unf({e_, Term::one(a), b});
        }
      }
    }
    std::optional<Dertree> proof;
    if (solver_) proof = solver_(a, b);
    if (!proof) proof = prove({e_, Term::one(a), b});
    solved_[key].push_back({a, b, proof});
    if (!proof) {
      unsolved_.emplace_back(a, b);
      return Dertree::unf({e_, Term::one(a), b});
    }
    return *proof;
  }

  struct Solved {
    Form a;
    Form b;
    std::optional<Dertree> proof;
  };

  ExtensionRef e_;
  const ObligationSolver& solver_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Solved>> solved_;
  std::vector<std::pair<Form, Form>> unsolved_;
};

}  // namespace

Result<Dertree> arrow_to_gentzen(const ArrowProof& p, const ExtensionRef& e,
                                 const ObligationSolver& solver) {
  ArrowLowering lowering(e, solver);
  Dertree d = lowering.lower(p);
  if (!lowering.unsolved().empty()) {
    std::string msg = "unsatisfied extension obligation(s):";
    for (const auto& [a, b] : lowering.unsolved()) {
      msg += " " + render_category(a) + " |- " + render_category(b) + ";";
    }
    msg.pop_back();
    return CheckError{CheckErrorKind::kObligation, msg, {}};
  }
  return d;
}

// ---- natural deduction to the sequent calculus ----

namespace {

using NKind = NatDedNode::Kind;

Dertree natded_lower(const ExtensionRef& e, const NatDedNode& n) {
  auto der = [&](Term ante, Form succ, RuleName r, std::vector<Dertree> kids = {}) {
    return Dertree::der({e, ante, succ}, r, std::move(kids));
  };
  auto axiom = [&](Form a) { return der(Term::one(a), a, RuleName::kSeqAxiom); };
  std::vector<Dertree> kids;
  for (const NatDedNode& c : n.children) kids.push_back(natded_lower(e, c));
  switch (n.kind) {
    case NKind::kNatAxiom:
      return der(n.ante, n.succ, RuleName::kSeqAxiom);
    case NKind::kSlashIntro:
      return der(n.ante, n.succ, RuleName::kRightSlash, std::move(kids));
    case NKind::kBackslashIntro:
      return der(n.ante, n.succ, RuleName::kRightBackslash, std::move(kids));
    case NKind::kDotIntro:
      return der(n.ante, n.succ, RuleName::kRightDot, std::move(kids));
    case NKind::kSlashElim: {
      // (A/B, Delta) |- A by LeftSlash, then cut Gamma |- A/B into it.
      const NatDedNode& fn = n.children[0];
      const NatDedNode& arg = n.children[1];
      Term applied = Term::comma(Term::one(fn.succ), arg.ante);
      Dertree step =
          der(applied, n.succ, RuleName::kLeftSlash, {axiom(n.succ), std::move(kids[1])});
      if (fn.kind == NKind::kNatAxiom) return step;
      return der(n.ante, n.succ, RuleName::kCutRule, {std::move(step), std::move(kids[0])});
    }
    case NKind::kBackslashElim: {
      const NatDedNode& arg = n.children[0];
      const NatDedNode& fn = n.children[1];
      Term applied = Term::comma(arg.ante, Term::one(fn.succ));
      Dertree step =
          der(applied, n.succ, RuleName::kLeftBackslash, {axiom(n.succ), std::move(kids[0])});
      if (fn.kind == NKind::kNatAxiom) return step;
      return der(n.ante, n.succ, RuleName::kCutRule, {std::move(step), std::move(kids[1])});
    }
    case NKind::kDotElim: {
      // Gamma[p := A.B] |- C by LeftDot, then cut Delta |- A.B at p.
      const NatDedNode& prod = n.children[0];
      const NatDedNode& body = n.children[1];
      Path p;
      if (n.path) {
        p = *n.path;
      } else {
        Term pair = Term::comma(Term::one(prod.succ.left()), Term::one(prod.succ.right()));
        for (const Path& q : occurrences(body.ante, pair)) {
          if (replace_at(body.ante, q, prod.ante) == n.ante) {
            p = q;
            break;
          }
        }
      }
      Term folded = replace_at(body.ante, p, Term::one(prod.succ));
      Dertree step = der(folded, n.succ, RuleName::kLeftDot, {std::move(kids[1])});
      if (prod.kind == NKind::kNatAxiom) return step;
      return der(n.ante, n.succ, RuleName::kCutRule, {std::move(step), std::move(kids[0])});
    }
    case NKind::kNatExt:
      return der(n.ante, n.succ, RuleName::kSeqExt, std::move(kids));
  }
  throw LambekError("natded_to_gentzen: unknown node kind");
}

}  // namespace

Result<Dertree> natded_to_gentzen(const NatDedProof& p) {
  Status ok = check_natded_proof(p);
  if (!ok.ok()) return ok.error();
  return natded_lower(p.ext, p.root);
}

}  // namespace lambek
