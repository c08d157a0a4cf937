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

#include <cctype>
#include <string>

#include "lambek/error.hpp"
#include "lambek/forms.hpp"

namespace lambek {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_atom_char(char c) {
  switch (c) {
    case '/':
    case '\\':
    case '.':
    case '(':
    case ')':
    case ',':
      return false;
    default:
      return !is_space(c);
  }
}

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  Form form() {
    Form left = slash_term();
    while (peek() == '.') {
      ++pos_;
      left = Form::dot(left, slash_term());
    }
    return left;
  }

  Term term() {
    skip_space();
    if (peek() == '(') {
      std::size_t start = pos_;
      // A parenthesised group is a form unless a comma follows its first
      // item at depth one.
      try {
        Form f = form();
        char next = peek();
        if (next == ',' || next == ')' || next == '\0') return Term::one(f);
      } catch (const SyntaxError&) {
      }
      pos_ = start;
      expect('(');
      Term l = term();
      expect(',');
      Term r = term();
      expect(')');
      return Term::comma(l, r);
    }
    return Term::one(form());
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(
        what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"", pos_);
  }

  std::size_t pos() const { return pos_; }

 private:
  Form slash_term() {
    Form left = bslash_term();
    while (peek() == '/') {
      ++pos_;
      left = Form::slash(left, bslash_term());
    }
    return left;
  }

  Form bslash_term() {
    Form den = atom_term();
    if (peek() == '\\') {
      ++pos_;
      return Form::backslash(den, bslash_term());
    }
    return den;
  }

  Form atom_term() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Form inner = form();
      expect(')');
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(c == '\0' ? "unexpected end of input" : "expected atom or '('");
    return Form::atom(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

enum Level { kDotLevel = 0, kSlashLevel = 1, kBackslashLevel = 2, kAtomLevel = 3 };

Level level_of(Form f) {
  switch (f.kind()) {
    case Form::Kind::kAtom:
      return kAtomLevel;
    case Form::Kind::kSlash:
      return kSlashLevel;
    case Form::Kind::kBackslash:
      return kBackslashLevel;
    case Form::Kind::kDot:
      return kDotLevel;
  }
  return kAtomLevel;
}

void render(Form f, Level min_level, std::string& out) {
  if (level_of(f) < min_level) {
    out.push_back('(');
    render(f, kDotLevel, out);
    out.push_back(')');
    return;
  }
  switch (f.kind()) {
    case Form::Kind::kAtom:
      out += f.name();
      return;
    case Form::Kind::kDot:
      render(f.left(), kDotLevel, out);
      out.push_back('.');
      render(f.right(), kSlashLevel, out);
      return;
    case Form::Kind::kSlash:
      render(f.left(), kSlashLevel, out);
      out.push_back('/');
      render(f.right(), kBackslashLevel, out);
      return;
    case Form::Kind::kBackslash:
      render(f.left(), kAtomLevel, out);
      out.push_back('\\');
      render(f.right(), kBackslashLevel, out);
      return;
  }
}

void render(Term t, std::string& out) {
  if (t.is_one()) {
    render(t.form(), kDotLevel, out);
    return;
  }
  out.push_back('(');
  render(t.left(), out);
  out += ", ";
  render(t.right(), out);
  out.push_back(')');
}

}  // namespace

Form parse_category(std::string_view text) {
  TextParser p(text);
  Form f = p.form();
  p.finish();
  return f;
}

std::string render_category(Form f) {
  std::string out;
  render(f, kDotLevel, out);
  return out;
}

Term parse_term(std::string_view text) {
  TextParser p(text);
  Term t = p.term();
  if (p.peek() == ',') {
    p.expect(',');
    Term r = p.term();
    t = Term::comma(t, r);
  }
  p.finish();
  return t;
}

std::string render_term(Term t) {
  std::string out;
  render(t, out);
  return out;
}

}  // namespace lambek
