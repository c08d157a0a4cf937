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

#include "lambek/forms.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "lambek/error.hpp"

namespace lambek {

namespace detail {

struct FormNode {
  Form::Kind kind;
  int degree;
  std::size_t hash;
  const FormNode* left;
  const FormNode* right;
  std::string name;
};

struct TermNode {
  Term::Kind kind;
  std::size_t leaves;
  std::size_t hash;
  const FormNode* form;
  const TermNode* left;
  const TermNode* right;
};

}  // namespace detail

namespace {

using detail::FormNode;
using detail::TermNode;

std::size_t mix(std::size_t seed, std::size_t v) {
  // 64-bit variant of boost::hash_combine.
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 12) + (seed >> 4));
}

struct NodeKeyHash {
  using is_transparent = void;
  std::size_t operator()(const FormNode* n) const { return n->hash; }
  std::size_t operator()(const TermNode* n) const { return n->hash; }
};

struct FormNodeEq {
  bool operator()(const FormNode* a, const FormNode* b) const {
    return a->kind == b->kind && a->left == b->left && a->right == b->right && a->name == b->name;
  }
};

struct TermNodeEq {
  bool operator()(const TermNode* a, const TermNode* b) const {
    return a->kind == b->kind && a->form == b->form && a->left == b->left && a->right == b->right;
  }
};

bool is_reserved(char c) {
  switch (c) {
    case '/':
    case '\\':
    case '.':
    case '(':
    case ')':
    case ',':
    case ' ':
    case '\t':
    case '\n':
    case '\r':
    case '\v':
    case '\f':
      return true;
    default:
      return false;
  }
}

}  // namespace

class FormPool {
 public:
  static FormPool& instance() {
    static FormPool* pool = new FormPool();
    return *pool;
  }

  Form intern(FormNode candidate) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(&candidate);
    if (it != index_.end()) return Form(*it);
    storage_.push_back(std::move(candidate));
    const FormNode* node = &storage_.back();
    index_.insert(node);
    return Form(node);
  }

  static Form wrap(const FormNode* n) { return Form(n); }

 private:
  std::mutex mu_;
  std::deque<FormNode> storage_;
  std::unordered_set<const FormNode*, NodeKeyHash, FormNodeEq> index_;
};

class TermPool {
 public:
  static TermPool& instance() {
    static TermPool* pool = new TermPool();
    return *pool;
  }

  Term intern(TermNode candidate) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(&candidate);
    if (it != index_.end()) return Term(*it);
    storage_.push_back(candidate);
    const TermNode* node = &storage_.back();
    index_.insert(node);
    return Term(node);
  }

  static Term wrap(const TermNode* n) { return Term(n); }

 private:
  std::mutex mu_;
  std::deque<TermNode> storage_;
  std::unordered_set<const TermNode*, NodeKeyHash, TermNodeEq> index_;
};

// ---- Form -----------------------------------------------------------------

Form Form::atom(std::string_view name) {
  if (name.empty()) throw SyntaxError("empty atom name", 0);
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (is_reserved(name[i])) {
      throw SyntaxError("reserved character in atom name '" + std::string(name) + "'", i);
    }
  }
  FormNode n{Kind::kAtom, 1,       mix(0x51ed270b, std::hash<std::string_view>{}(name)),
             nullptr,     nullptr, std::string(name)};
  return FormPool::instance().intern(std::move(n));
}

static Form make_binary(Form::Kind kind, Form l, Form r) {
  std::size_t h =
      mix(mix(static_cast<std::size_t>(kind) * 0x2545f4914f6cdd1dULL, l.hash()), r.hash());
  FormNode n{kind, 1 + std::max(l.degree(), r.degree()), h, l.node(), r.node(), {}};
  return FormPool::instance().intern(std::move(n));
}

Form Form::slash(Form num, Form den) { return make_binary(Kind::kSlash, num, den); }
Form Form::backslash(Form den, Form num) { return make_binary(Kind::kBackslash, den, num); }
Form Form::dot(Form left, Form right) { return make_binary(Kind::kDot, left, right); }

Form::Kind Form::kind() const { return node_->kind; }
const std::string& Form::name() const { return node_->name; }
Form Form::left() const { return FormPool::wrap(node_->left); }
Form Form::right() const { return FormPool::wrap(node_->right); }

Form Form::num() const { return kind() == Kind::kSlash ? left() : right(); }
Form Form::den() const { return kind() == Kind::kSlash ? right() : left(); }

int Form::degree() const { return node_->degree; }
std::size_t Form::hash() const { return node_->hash; }

int compare(Form a, Form b) {
  if (a == b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.is_atom()) return a.name() < b.name() ? -1 : 1;
  int c = compare(a.left(), b.left());
  if (c != 0) return c;
  return compare(a.right(), b.right());
}

bool structurally_less(Form a, Form b) { return compare(a, b) < 0; }

// ---- Term -----------------------------------------------------------------

Term Term::one(Form form) {
  TermNode n{Kind::kOneForm, 1, mix(0x7a3c1d, form.hash()), form.node(), nullptr, nullptr};
  return TermPool::instance().intern(n);
}

Term Term::comma(Term left, Term right) {
  TermNode n{Kind::kComma,
             left.leaves() + right.leaves(),
             mix(mix(0x3bd39e10cb0ef593ULL, left.hash()), right.hash()),
             nullptr,
             left.node(),
             right.node()};
  return TermPool::instance().intern(n);
}

Term::Kind Term::kind() const { return node_->kind; }
Form Term::form() const { return FormPool::wrap(node_->form); }
Term Term::left() const { return TermPool::wrap(node_->left); }
Term Term::right() const { return TermPool::wrap(node_->right); }
std::size_t Term::leaves() const { return node_->leaves; }
std::size_t Term::hash() const { return node_->hash; }

int compare(Term a, Term b) {
  if (a == b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.is_one()) return compare(a.form(), b.form());
  int c = compare(a.left(), b.left());
  if (c != 0) return c;
  return compare(a.right(), b.right());
}

bool structurally_less(Term a, Term b) { return compare(a, b) < 0; }

// ---- Path -----------------------------------------------------------------

Path Path::child(Dir d) const {
  Path p = *this;
  p.steps.push_back(d);
  return p;
}

std::string Path::to_string() const {
  std::string s;
  s.reserve(steps.size());
  for (Dir d : steps) s.push_back(d == Dir::kLeft ? 'L' : 'R');
  return s;
}

Path Path::from_string(std::string_view text) {
  Path p;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'L') {
      p.steps.push_back(Dir::kLeft);
    } else if (text[i] == 'R') {
      p.steps.push_back(Dir::kRight);
    } else {
      throw SyntaxError("path must be a string over {L, R}", i);
    }
  }
  return p;
}

// ---- relations ------------------------------------------------------------

Form delta_translation(Term t) {
  if (t.is_one()) return t.form();
  return Form::dot(delta_translation(t.left()), delta_translation(t.right()));
}

int degree_formula(Form f) { return f.degree(); }

bool is_sub_formula(Form a, Form b) {
  if (a == b) return true;
  // A proper sub-formula has strictly smaller degree.
  if (b.is_atom() || a.degree() >= b.degree()) return false;
  return is_sub_formula(a, b.left()) || is_sub_formula(a, b.right());
}

bool is_sub_form_term(Form a, Term t) {
  if (t.is_one()) return is_sub_formula(a, t.form());
  return is_sub_form_term(a, t.left()) || is_sub_form_term(a, t.right());
}

static void collect_sub_formulas(Form f, std::vector<Form>& out) {
  if (std::find(out.begin(), out.end(), f) != out.end()) return;
  out.push_back(f);
  if (!f.is_atom()) {
    collect_sub_formulas(f.left(), out);
    collect_sub_formulas(f.right(), out);
  }
}

std::vector<Form> sub_formulas(Form f) {
  std::vector<Form> out;
  collect_sub_formulas(f, out);
  return out;
}

std::vector<Form> sub_formulas(Term t) {
  std::vector<Form> out;
  for (Form f : leaf_forms(t)) collect_sub_formulas(f, out);
  return out;
}

static void collect_leaves(Term t, std::vector<Form>& out) {
  if (t.is_one()) {
    out.push_back(t.form());
    return;
  }
  collect_leaves(t.left(), out);
  collect_leaves(t.right(), out);
}

std::vector<Form> leaf_forms(Term t) {
  std::vector<Form> out;
  out.reserve(t.leaves());
  collect_leaves(t, out);
  return out;
}

const char* to_string(CheckErrorKind kind) {
  switch (kind) {
    case CheckErrorKind::kRuleMismatch:
      return "rule-mismatch";
    case CheckErrorKind::kArity:
      return "arity";
    case CheckErrorKind::kExtensionMismatch:
      return "extension-mismatch";
    case CheckErrorKind::kUnfinished:
      return "unfinished";
    case CheckErrorKind::kObligation:
      return "unsatisfied-obligation";
  }
  return "unknown";
}

std::string CheckError::describe() const {
  std::string path = "/";
  for (std::size_t i = 0; i < tree_path.size(); ++i) {
    if (i > 0) path += "/";
    path += std::to_string(tree_path[i]);
  }
  return std::string(to_string(kind)) + " at " + path + ": " + message;
}

}  // namespace lambek
