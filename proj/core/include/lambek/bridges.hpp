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

#ifndef LAMBEK_BRIDGES_HPP_
#define LAMBEK_BRIDGES_HPP_

// Translations between the sequent calculus, the arrow calculus and
// natural deduction.

#include <functional>
#include <optional>

#include "lambek/arrow.hpp"
#include "lambek/dertree.hpp"
#include "lambek/natded.hpp"

namespace lambek {

// Each term rule lhs -> rhs becomes the form rule delta(rhs) -> delta(lhs),
// under the same name.
ArrowExtension to_arrow_ext(const Extension& e);

// An arrow proof of delta(prems(d)) -> concl(d) over to_arrow_ext(exten(d)).
// Fails with the check_proof error when d is not a valid complete proof.
Result<ArrowProof> gentzen_to_arrow(const Dertree& d);

// Supplies sequent proofs of OneForm(a) |- b for extension leaves.
using ObligationSolver = std::function<std::optional<Dertree>(Form a, Form b)>;

// A proof of OneForm(source) |- target under `e`. Extension leaves are
// discharged by `solver` when given, otherwise by prove. Unsolved leaves
// give a kObligation error naming every failing pair.
Result<Dertree> arrow_to_gentzen(const ArrowProof& p, const ExtensionRef& e,
                                 const ObligationSolver& solver = {});

// A sequent proof of the same end sequent; elimination rules become left
// rules followed by cuts. Fails with the check error on invalid input.
Result<Dertree> natded_to_gentzen(const NatDedProof& p);

}  // namespace lambek

#endif  // LAMBEK_BRIDGES_HPP_
