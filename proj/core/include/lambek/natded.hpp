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

#ifndef LAMBEK_NATDED_HPP_
#define LAMBEK_NATDED_HPP_

// Natural deduction proofs over sequents Gamma |- A.

#include <optional>
#include <string>
#include <vector>

#include "lambek/error.hpp"
#include "lambek/extensions.hpp"
#include "lambek/forms.hpp"

namespace lambek {

struct NatDedNode {
  enum class Kind {
    kNatAxiom,
    kSlashIntro,
    kBackslashIntro,
    kDotIntro,
    kSlashElim,
    kBackslashElim,
    kDotElim,
    kNatExt,
  };

  Kind kind;
  Term ante;
  Form succ;
  std::vector<NatDedNode> children;
  // SlashElim / BackslashElim: the eliminated argument B, if recorded.
  std::optional<Form> b;
  // DotElim: where (A, B) sits in the second premise. NatExt: where the
  // rewritten subterm sits. Searched in preorder when absent.
  std::optional<Path> path;
  // NatExt: extension rule name; empty accepts any rule.
  std::string rule;

  // Builders derive the claimed sequent from the premises and throw
  // PreconditionError on a shape mismatch.
  static NatDedNode axiom(Form a);
  // (Gamma, B) |- A gives Gamma |- A/B.
  static NatDedNode slash_intro(NatDedNode p);
  // (B, Gamma) |- A gives Gamma |- B\A.
  static NatDedNode backslash_intro(NatDedNode p);
  static NatDedNode dot_intro(NatDedNode p, NatDedNode q);
  // Gamma |- A/B and Delta |- B give (Gamma, Delta) |- A.
  static NatDedNode slash_elim(NatDedNode p, NatDedNode q);
  // Gamma |- B and Delta |- B\A give (Gamma, Delta) |- A.
  static NatDedNode backslash_elim(NatDedNode p, NatDedNode q);
  // Delta |- A.B and Gamma |- C, with (A, B) at `at` in Gamma, give
  // Gamma[at := Delta] |- C.
  static NatDedNode dot_elim(NatDedNode p, NatDedNode q, Path at);
  // Gamma |- C gives Gamma[at := Delta'] |- C.
  static NatDedNode nat_ext(NatDedNode p, Path at, Term delta_prime, std::string rule = {});

  bool operator==(const NatDedNode&) const = default;
};

struct NatDedProof {
  ExtensionRef ext;
  NatDedNode root;
};

const char* to_string(NatDedNode::Kind k);
std::optional<NatDedNode::Kind> parse_natded_kind(std::string_view text);

// Validates every node; the error path lists child indices from the root.
Status check_natded_proof(const NatDedProof& p);

}  // namespace lambek

#endif  // LAMBEK_NATDED_HPP_
