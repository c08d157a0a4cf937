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

#ifndef LAMBEK_TERM_REPLACE_HPP_
#define LAMBEK_TERM_REPLACE_HPP_

// Positional term surgery. The inductive 4-ary `replace` relation is
// realised through Paths: replace t1 t2 t3 t4 holds iff some occurrence of
// t3 in t1 can be overwritten by t4 to give t2.

#include <vector>

#include "lambek/forms.hpp"

namespace lambek {

// Throws PathError naming the first step that leaves `t`.
Term subterm_at(Term t, const Path& p);

// `t` with the subtree at `p` replaced by `replacement`.
Term replace_at(Term t, const Path& p, Term replacement);

bool is_valid_path(Term t, const Path& p);

// Every path of `t`, preorder (root, left subtree, right subtree).
std::vector<Path> all_paths(Term t);

// Paths p (preorder) with subterm_at(t, p) == sub.
std::vector<Path> occurrences(Term t, Term sub);

bool holds_replace(Term t1, Term t2, Term t3, Term t4);

// replaceCommaDot: t2 is reachable from t1 by collapsing subterms
// Comma(OneForm A, OneForm B) into OneForm(A.B), zero or more times.
// Decided by the equivalent structural criterion: t2 is t1 with a set of
// disjoint subtrees s each replaced by OneForm(delta_translation(s)).
bool decide_replace_comma_dot(Term t1, Term t2);

// Invokes f(path, subterm) for every subtree of t in preorder.
template <typename F>
void for_each_subterm(Term t, F&& f) {
  Path p;
  struct Walker {
    F& f;
    Path& p;
    void operator()(Term s) {
      f(static_cast<const Path&>(p), s);
      if (s.is_comma()) {
        p.steps.push_back(Dir::kLeft);
        (*this)(s.left());
        p.steps.back() = Dir::kRight;
        (*this)(s.right());
        p.steps.pop_back();
      }
    }
  };
  Walker{f, p}(t);
}

}  // namespace lambek

#endif  // LAMBEK_TERM_REPLACE_HPP_
