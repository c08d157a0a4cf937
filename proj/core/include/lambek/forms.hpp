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

#ifndef LAMBEK_FORMS_HPP_
#define LAMBEK_FORMS_HPP_

// Syntactic categories (Form), bracketed antecedents (Term) and positional
// addresses into terms (Path).
//
// Form and Term are hash-consed: every structurally distinct tree exists
// exactly once in a process-wide pool, so handles are trivially copyable,
// equality is pointer equality and hashing is O(1). Pool nodes are never
// released. The pool is guarded by a mutex; handles themselves are
// immutable and may be shared freely between threads.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lambek {

namespace detail {
struct FormNode;
struct TermNode;
}  // namespace detail

class Form {
 public:
  enum class Kind : std::uint8_t { kAtom, kSlash, kBackslash, kDot };

  // Throws SyntaxError when `name` is empty or contains whitespace or one
  // of the reserved characters `/ \ . ( ) ,`.
  static Form atom(std::string_view name);
  // num / den
  static Form slash(Form num, Form den);
  // den \ num
  static Form backslash(Form den, Form num);
  static Form dot(Form left, Form right);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::kAtom; }
  // Atom name; empty for compound forms.
  const std::string& name() const;

  // Children in written order: Slash(num, den), Backslash(den, num),
  // Dot(left, right). Undefined on atoms.
  Form left() const;
  Form right() const;

  // Slash numerator / denominator and Backslash denominator / numerator.
  Form num() const;
  Form den() const;

  // degreeFormula: atoms have degree 1; a connective adds one to the
  // larger degree of its children.
  int degree() const;
  std::size_t hash() const;

  bool operator==(const Form& other) const { return node_ == other.node_; }
  bool operator!=(const Form& other) const { return node_ != other.node_; }

  // Total structural order, stable across runs.
  friend int compare(Form a, Form b);

  const detail::FormNode* node() const { return node_; }

 private:
  explicit Form(const detail::FormNode* node) : node_(node) {}
  friend class FormPool;

  const detail::FormNode* node_;
};

int compare(Form a, Form b);
bool structurally_less(Form a, Form b);

class Term {
 public:
  enum class Kind : std::uint8_t { kOneForm, kComma };

  static Term one(Form form);
  static Term comma(Term left, Term right);

  Kind kind() const;
  bool is_one() const { return kind() == Kind::kOneForm; }
  bool is_comma() const { return kind() == Kind::kComma; }

  // Precondition: is_one().
  Form form() const;
  // Precondition: is_comma().
  Term left() const;
  Term right() const;

  std::size_t leaves() const;
  std::size_t hash() const;

  bool operator==(const Term& other) const { return node_ == other.node_; }
  bool operator!=(const Term& other) const { return node_ != other.node_; }

  friend int compare(Term a, Term b);

  const detail::TermNode* node() const { return node_; }

 private:
  explicit Term(const detail::TermNode* node) : node_(node) {}
  friend class TermPool;

  const detail::TermNode* node_;
};

// Deterministic structural order for Terms.
int compare(Term a, Term b);
bool structurally_less(Term a, Term b);

enum class Dir : std::uint8_t { kLeft, kRight };

struct Path {
  std::vector<Dir> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  Path child(Dir d) const;
  bool operator==(const Path& other) const = default;

  // "" for the root, otherwise a string over {L, R}.
  std::string to_string() const;
  static Path from_string(std::string_view text);
};

// Convenience builders.
inline Form at(std::string_view name) { return Form::atom(name); }
inline Term leaf(Form f) { return Term::one(f); }

// deltaTranslation: Comma becomes Dot.
Form delta_translation(Term t);

int degree_formula(Form f);

// subFormula a b: `a` occurs as a subtree of `b` (reflexive).
bool is_sub_formula(Form a, Form b);

// subFormTerm a t: `a` is a sub-formula of some leaf of `t`.
bool is_sub_form_term(Form a, Term t);

// Every sub-formula of `f`, without duplicates, in preorder of first
// occurrence.
std::vector<Form> sub_formulas(Form f);
// Every sub-formula of every leaf of `t`, without duplicates.
std::vector<Form> sub_formulas(Term t);

// Leaves of `t` left to right.
std::vector<Form> leaf_forms(Term t);

// Category text. Grammar, lowest precedence first:
//   form      := dotterm
//   dotterm   := slashterm ("." slashterm)*      left-associative
//   slashterm := bslashterm ("/" bslashterm)*    left-associative
//   bslashterm:= atomterm ("\" bslashterm)?      right-associative
//   atomterm  := ATOM | "(" form ")"
Form parse_category(std::string_view text);
std::string render_category(Form f);

// Term text: a bare form, or "(" term "," term ")". A single top-level
// comma without the outer parentheses is also accepted.
Term parse_term(std::string_view text);
std::string render_term(Term t);

}  // namespace lambek

template <>
struct std::hash<lambek::Form> {
  std::size_t operator()(const lambek::Form& f) const noexcept { return f.hash(); }
};

template <>
struct std::hash<lambek::Term> {
  std::size_t operator()(const lambek::Term& t) const noexcept { return t.hash(); }
};

#endif  // LAMBEK_FORMS_HPP_
