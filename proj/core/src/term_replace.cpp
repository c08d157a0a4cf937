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

#include "lambek/term_replace.hpp"

#include <string>

#include "lambek/error.hpp"

namespace lambek {

Term subterm_at(Term t, const Path& p) {
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (!t.is_comma()) {
      throw PathError("path step " + std::to_string(i) + " (" +
                          (p.steps[i] == Dir::kLeft ? "L" : "R") + ") leaves the term",
                      i);
    }
    t = p.steps[i] == Dir::kLeft ? t.left() : t.right();
  }
  return t;
}

bool is_valid_path(Term t, const Path& p) {
  for (Dir d : p.steps) {
    if (!t.is_comma()) return false;
    t = d == Dir::kLeft ? t.left() : t.right();
  }
  return true;
}

static Term replace_from(Term t, const Path& p, std::size_t i, Term replacement) {
  if (i == p.steps.size()) return replacement;
  if (!t.is_comma()) {
    throw PathError("path step " + std::to_string(i) + " leaves the term", i);
  }
  if (p.steps[i] == Dir::kLeft) {
    return Term::comma(replace_from(t.left(), p, i + 1, replacement), t.right());
  }
  return Term::comma(t.left(), replace_from(t.right(), p, i + 1, replacement));
}

Term replace_at(Term t, const Path& p, Term replacement) {
  return replace_from(t, p, 0, replacement);
}

std::vector<Path> all_paths(Term t) {
  std::vector<Path> out;
  for_each_subterm(t, [&](const Path& p, Term) { out.push_back(p); });
  return out;
}

std::vector<Path> occurrences(Term t, Term sub) {
  std::vector<Path> out;
  for_each_subterm(t, [&](const Path& p, Term s) {
    if (s == sub) out.push_back(p);
  });
  return out;
}

bool holds_replace(Term t1, Term t2, Term t3, Term t4) {
  for (const Path& p : occurrences(t1, t3)) {
    if (replace_at(t1, p, t4) == t2) return true;
  }
  return false;
}

bool decide_replace_comma_dot(Term t1, Term t2) {
  if (t1 == t2) return true;
  if (t2.is_one()) return delta_translation(t1) == t2.form();
  if (t1.is_comma()) {
    return decide_replace_comma_dot(t1.left(), t2.left()) &&
           decide_replace_comma_dot(t1.right(), t2.right());
  }
  return false;
}

}  // namespace lambek
