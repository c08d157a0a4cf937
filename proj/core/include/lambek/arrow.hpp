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

#ifndef LAMBEK_ARROW_HPP_
#define LAMBEK_ARROW_HPP_

// The axiomatic arrow calculus: proofs of claims A -> B built from the
// rules one, beta, beta', gamma, gamma', comp and extension leaves.

#include <optional>
#include <string>
#include <vector>

#include "lambek/error.hpp"
#include "lambek/extensions.hpp"
#include "lambek/forms.hpp"

namespace lambek {

struct ArrowProof {
  enum class Kind { kOne, kBeta, kBetaInv, kGamma, kGammaInv, kComp, kExt };

  Kind kind = Kind::kOne;
  Form source;
  Form target;
  // One child for the beta/gamma family, two for comp.
  std::vector<ArrowProof> children;
  // comp: the intermediate formula.
  std::optional<Form> mid;
  // Ext: the extension rule name; empty accepts any rule of the extension.
  std::string rule;

  // Builders derive the claim from the premises and throw
  // PreconditionError when a premise has the wrong shape.
  static ArrowProof one(Form a);
  // (A.B -> C) gives A -> C/B.
  static ArrowProof beta(ArrowProof p);
  // A -> C/B gives A.B -> C.
  static ArrowProof beta_inv(ArrowProof p);
  // (A.B -> C) gives B -> A\C.
  static ArrowProof gamma(ArrowProof p);
  // B -> A\C gives A.B -> C.
  static ArrowProof gamma_inv(ArrowProof p);
  // A -> B and B -> C give A -> C.
  static ArrowProof comp(ArrowProof p, ArrowProof q);
  static ArrowProof ext(std::string rule, Form a, Form b);

  bool operator==(const ArrowProof&) const = default;
};

const char* to_string(ArrowProof::Kind k);
std::optional<ArrowProof::Kind> parse_arrow_kind(std::string_view text);

std::size_t node_count(const ArrowProof& p);
// Rule layers; one and ext leaves have depth 1.
std::size_t tree_depth(const ArrowProof& p);

// Validates every node; the error path lists child indices from the root.
Status check_arrow_proof(const ArrowExtension& x, const ArrowProof& p);

// Monotonicity combinators, built from the primitive rules only.
// A.B' -> A.B from q: B' -> B.
ArrowProof mono_dot_right(Form a, ArrowProof q);
// A'.B -> A.B from q: A' -> A.
ArrowProof mono_dot_left(ArrowProof q, Form b);
// A.B -> C.D from p: A -> C and q: B -> D.
ArrowProof mono_dot(ArrowProof p, ArrowProof q);
// C'/B -> C/B from p: C' -> C.
ArrowProof mono_slash_left(ArrowProof p, Form b);
// C/B -> C/B' from p: B' -> B.
ArrowProof antimono_slash_right(Form c, ArrowProof p);
// A'\C -> A\C from p: A -> A'.
ArrowProof antimono_backslash_left(ArrowProof p, Form c);
// A\C' -> A\C from p: C' -> C.
ArrowProof mono_backslash_right(Form a, ArrowProof p);

}  // namespace lambek

#endif  // LAMBEK_ARROW_HPP_
