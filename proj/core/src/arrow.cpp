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

#include "lambek/arrow.hpp"

#include <algorithm>

namespace lambek {

namespace {

using Kind = ArrowProof::Kind;

ArrowProof node(Kind k, Form source, Form target, std::vector<ArrowProof> children = {},
                std::optional<Form> mid = std::nullopt, std::string rule = {}) {
  return {k, source, target, std::move(children), mid, std::move(rule)};
}

std::string claim(Form a, Form b) { return render_category(a) + " -> " + render_category(b); }

[[noreturn]] void bad_premise(const char* rule, const ArrowProof& p, const char* want) {
  throw PreconditionError(std::string(rule) + ": premise " + claim(p.source, p.target) +
                          " is not of the form " + want);
}

}  // namespace

ArrowProof ArrowProof::one(Form a) { return node(Kind::kOne, a, a); }

ArrowProof ArrowProof::beta(ArrowProof p) {
  if (p.source.kind() != Form::Kind::kDot) bad_premise("beta", p, "A.B -> C");
  Form a = p.source.left();
  Form b = p.source.right();
  Form c = p.target;
  return node(Kind::kBeta, a, Form::slash(c, b), {std::move(p)});
}

ArrowProof ArrowProof::beta_inv(ArrowProof p) {
  if (p.target.kind() != Form::Kind::kSlash) bad_premise("beta'", p, "A -> C/B");
  Form a = p.source;
  Form c = p.target.num();
  Form b = p.target.den();
  return node(Kind::kBetaInv, Form::dot(a, b), c, {std::move(p)});
}

ArrowProof ArrowProof::gamma(ArrowProof p) {
  if (p.source.kind() != Form::Kind::kDot) bad_premise("gamma", p, "A.B -> C");
  Form a = p.source.left();
  Form b = p.source.right();
  Form c = p.target;
  return node(Kind::kGamma, b, Form::backslash(a, c), {std::move(p)});
}

ArrowProof ArrowProof::gamma_inv(ArrowProof p) {
  if (p.target.kind() != Form::Kind::kBackslash) bad_premise("gamma'", p, "B -> A\\C");
  Form b = p.source;
  Form a = p.target.den();
  Form c = p.target.num();
  return node(Kind::kGammaInv, Form::dot(a, b), c, {std::move(p)});
}

ArrowProof ArrowProof::comp(ArrowProof p, ArrowProof q) {
  if (p.target != q.source) {
    throw PreconditionError("comp: " + claim(p.source, p.target) + " does not meet " +
                            claim(q.source, q.target));
  }
  Form a = p.source;
  Form m = p.target;
  Form c = q.target;
  return node(Kind::kComp, a, c, {std::move(p), std::move(q)}, m);
}

ArrowProof ArrowProof::ext(std::string rule, Form a, Form b) {
  return node(Kind::kExt, a, b, {}, std::nullopt, std::move(rule));
}

const char* to_string(ArrowProof::Kind k) {
  switch (k) {
    case Kind::kOne:
      return "one";
    case Kind::kBeta:
      return "beta";
    case Kind::kBetaInv:
      return "beta'";
    case Kind::kGamma:
      return "gamma";
    case Kind::kGammaInv:
      return "gamma'";
    case Kind::kComp:
      return "comp";
    case Kind::kExt:
      return "ext";
  }
  return "?";
}

std::optional<ArrowProof::Kind> parse_arrow_kind(std::string_view text) {
  for (Kind k : {Kind::kOne, Kind::kBeta, Kind::kBetaInv, Kind::kGamma, Kind::kGammaInv,
                 Kind::kComp, Kind::kExt}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::size_t node_count(const ArrowProof& p) {
  std::size_t n = 1;
  for (const ArrowProof& c : p.children) n += node_count(c);
  return n;
}

std::size_t tree_depth(const ArrowProof& p) {
  std::size_t d = 0;
  for (const ArrowProof& c : p.children) d = std::max(d, tree_depth(c));
  return d + 1;
}

// ---- checking ----

namespace {

std::optional<std::string> check_local(const ArrowExtension& x, const ArrowProof& p) {
  auto arity = [&](std::size_t n) -> std::optional<std::string> {
    if (p.children.size() == n) return std::nullopt;
    return std::string(to_string(p.kind)) + " takes " + std::to_string(n) + " premise(s), got " +
           std::to_string(p.children.size());
  };
  switch (p.kind) {
    case Kind::kOne:
      if (auto e = arity(0)) return e;
      if (p.source != p.target) return std::string("one: source and target differ");
      return std::nullopt;
    case Kind::kBeta: {
      if (auto e = arity(1)) return e;
      const ArrowProof& c = p.children[0];
      if (c.source.kind() != Form::Kind::kDot)
        return std::string("beta: premise source is not A.B");
      if (p.source != c.source.left() || p.target != Form::slash(c.target, c.source.right())) {
        return "beta: premise " + claim(c.source, c.target) + " does not give " +
               claim(p.source, p.target);
      }
      return std::nullopt;
    }
    case Kind::kBetaInv: {
      if (auto e = arity(1)) return e;
      const ArrowProof& c = p.children[0];
      if (c.target.kind() != Form::Kind::kSlash) {
        return std::string("beta': premise target is not C/B");
      }
      if (p.source != Form::dot(c.source, c.target.den()) || p.target != c.target.num()) {
        return "beta': premise " + claim(c.source, c.target) + " does not give " +
               claim(p.source, p.target);
      }
      return std::nullopt;
    }
    case Kind::kGamma: {
      if (auto e = arity(1)) return e;
      const ArrowProof& c = p.children[0];
      if (c.source.kind() != Form::Kind::kDot) {
        return std::string("gamma: premise source is not A.B");
      }
      if (p.source != c.source.right() || p.target != Form::backslash(c.source.left(), c.target)) {
        return "gamma: premise " + claim(c.source, c.target) + " does not give " +
               claim(p.source, p.target);
      }
      return std::nullopt;
    }
    case Kind::kGammaInv: {
      if (auto e = arity(1)) return e;
      const ArrowProof& c = p.children[0];
      if (c.target.kind() != Form::Kind::kBackslash) {
        return std::string("gamma': premise target is not A\\C");
      }
      if (p.source != Form::dot(c.target.den(), c.source) || p.target != c.target.num()) {
        return "gamma': premise " + claim(c.source, c.target) + " does not give " +
               claim(p.source, p.target);
      }
      return std::nullopt;
    }
    case Kind::kComp: {
      if (auto e = arity(2)) return e;
      if (!p.mid) return std::string("comp: missing intermediate formula");
      const ArrowProof& l = p.children[0];
      const ArrowProof& r = p.children[1];
      if (l.source != p.source) return std::string("comp: first premise source differs");
      if (r.target != p.target) return std::string("comp: second premise target differs");
      if (l.target != *p.mid || r.source != *p.mid) {
        return "comp: premises " + claim(l.source, l.target) + " and " + claim(r.source, r.target) +
               " do not meet at " + render_category(*p.mid);
      }
      return std::nullopt;
    }
    case Kind::kExt: {
      if (auto e = arity(0)) return e;
      if (!p.rule.empty()) {
        const ArrowRule* r = x.find_rule(p.rule);
        if (!r) return "ext: extension " + x.name + " has no rule " + p.rule;
        if (!arrow_rule_relates(*r, p.source, p.target)) {
          return "ext: " + claim(p.source, p.target) + " is not an instance of " + p.rule;
        }
        return std::nullopt;
      }
      if (!arrow_relates(x, p.source, p.target)) {
        return "ext: " + claim(p.source, p.target) + " is not related by " + x.name;
      }
      return std::nullopt;
    }
  }
  return std::string("unknown node kind");
}

bool check_arrow_tree(const ArrowExtension& x, const ArrowProof& p, std::vector<std::size_t>& at,
                      CheckError& err) {
  if (auto msg = check_local(x, p)) {
    bool arity = msg->find("premise(s)") != std::string::npos;
    bool ext = p.kind == Kind::kExt;
    err.kind = arity ? CheckErrorKind::kArity
               : ext ? CheckErrorKind::kExtensionMismatch
                     : CheckErrorKind::kRuleMismatch;
    err.message = *msg + " at " + claim(p.source, p.target);
    err.tree_path = at;
    return false;
  }
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    at.push_back(i);
    if (!check_arrow_tree(x, p.children[i], at, err)) return false;
    at.pop_back();
  }
  return true;
}

}  // namespace

Status check_arrow_proof(const ArrowExtension& x, const ArrowProof& p) {
  std::vector<std::size_t> at;
  CheckError err;
  if (!check_arrow_tree(x, p, at, err)) return err;
  return Ok{};
}

// ---- combinators ----

ArrowProof mono_dot_right(Form a, ArrowProof q) {
  Form b = q.target;
  ArrowProof lifted = ArrowProof::gamma(ArrowProof::one(Form::dot(a, b)));
  return ArrowProof::gamma_inv(ArrowProof::comp(std::move(q), std::move(lifted)));
}

ArrowProof mono_dot_left(ArrowProof q, Form b) {
  Form a = q.target;
  ArrowProof lifted = ArrowProof::beta(ArrowProof::one(Form::dot(a, b)));
  return ArrowProof::beta_inv(ArrowProof::comp(std::move(q), std::move(lifted)));
}

ArrowProof mono_dot(ArrowProof p, ArrowProof q) {
  Form b = q.source;
  Form c = p.target;
  ArrowProof left = mono_dot_left(std::move(p), b);
  ArrowProof right = mono_dot_right(c, std::move(q));
  return ArrowProof::comp(std::move(left), std::move(right));
}

ArrowProof mono_slash_left(ArrowProof p, Form b) {
  Form c_prime = p.source;
  ArrowProof apply = ArrowProof::beta_inv(ArrowProof::one(Form::slash(c_prime, b)));
  return ArrowProof::beta(ArrowProof::comp(std::move(apply), std::move(p)));
}

ArrowProof antimono_slash_right(Form c, ArrowProof p) {
  Form b = p.target;
  Form cb = Form::slash(c, b);
  ArrowProof widen = mono_dot_right(cb, std::move(p));
  ArrowProof apply = ArrowProof::beta_inv(ArrowProof::one(cb));
  return ArrowProof::beta(ArrowProof::comp(std::move(widen), std::move(apply)));
}

ArrowProof antimono_backslash_left(ArrowProof p, Form c) {
  Form a_prime = p.target;
  Form ac = Form::backslash(a_prime, c);
  ArrowProof widen = mono_dot_left(std::move(p), ac);
  ArrowProof apply = ArrowProof::gamma_inv(ArrowProof::one(ac));
  return ArrowProof::gamma(ArrowProof::comp(std::move(widen), std::move(apply)));
}

ArrowProof mono_backslash_right(Form a, ArrowProof p) {
  Form c_prime = p.source;
  ArrowProof apply = ArrowProof::gamma_inv(ArrowProof::one(Form::backslash(a, c_prime)));
  return ArrowProof::gamma(ArrowProof::comp(std::move(apply), std::move(p)));
}

}  // namespace lambek
