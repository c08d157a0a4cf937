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

#ifndef LAMBEK_SEARCH_HPP_
#define LAMBEK_SEARCH_HPP_

// Backward cut-free proof search and a bounded brute-force oracle.
//
// prove runs a depth-first search over rule_expansions in rule_order, with
// a branch-local set of visited sequents. Before searching, the prover
// saturates the finite set of sequents reachable backwards from the goal
// and marks those with no cut-free proof at all; the search skips
// expansions with such a premise. Skipped branches could only have failed,
// so the proofs returned are those the plain search would return.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "lambek/dertree.hpp"

namespace lambek {

// SeqAxiom, RightSlash, RightBackslash, RightDot, LeftSlash, LeftBackslash,
// LeftDot, SeqExt.
std::vector<RuleName> default_rule_order();

struct SearchOptions {
  // Maximum number of rule layers in a returned proof.
  std::optional<std::size_t> max_depth;
  std::size_t max_solutions = 1;
  // Must not contain CutRule or repeat a rule. Rules left out are not used.
  std::vector<RuleName> rule_order = default_rule_order();
  // Prune a branch that revisits one of its own ancestor sequents.
  bool loop_check = true;
  // Skip premises the saturation pass proved underivable.
  bool prune_unprovable = true;
  // Also remember sequents whose depth-first search failed without
  // pruning against an ancestor. Ignored when max_depth is set.
  bool memoize_failures = false;
  // Give up after this many node expansions; 0 means no limit.
  std::size_t max_expansions = 0;
  // Saturation gives up (and prunes nothing) past this many sequents.
  std::size_t max_saturation = 2'000'000;
};

struct SearchStats {
  std::size_t expansions = 0;
  std::size_t loop_prunes = 0;
  std::size_t dead_prunes = 0;
  std::size_t memo_hits = 0;
  std::size_t saturated = 0;
  bool budget_exhausted = false;
};

// A prover bound to one extension and option set. The table of decided
// sequents persists between calls, which makes sweeps over many goals
// cheap. Not thread safe; use one Prover per thread.
class Prover {
 public:
  explicit Prover(ExtensionRef ext, SearchOptions opts = {});
  ~Prover();
  Prover(const Prover&) = delete;
  Prover& operator=(const Prover&) = delete;

  const ExtensionRef& ext() const;
  const SearchOptions& options() const;

  std::optional<Dertree> prove(Term ante, Form succ, SearchStats* stats = nullptr);
  std::vector<Dertree> prove_all(Term ante, Form succ, SearchStats* stats = nullptr);

  // Cut-free derivability using the rules of rule_order, ignoring
  // max_depth. nullopt when saturation hit max_saturation.
  std::optional<bool> provable(Term ante, Form succ);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// First proof in the canonical search order, or nullopt.
std::optional<Dertree> prove(const Sequent& s, const SearchOptions& opts = {},
                             SearchStats* stats = nullptr);

// Up to opts.max_solutions distinct proofs, in search order.
std::vector<Dertree> prove_all(const Sequent& s, const SearchOptions& opts = {},
                               SearchStats* stats = nullptr);

// Exhaustive cut-free derivability with at most `depth` rule layers, by
// plain recursion over rule_expansions. A single Oracle may answer many
// queries under one extension.
class Oracle {
 public:
  explicit Oracle(ExtensionRef ext);
  ~Oracle();
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  bool provable(Term ante, Form succ, std::size_t depth);
  std::size_t table_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool oracle_provable(const Sequent& s, std::size_t depth);

}  // namespace lambek

#endif  // LAMBEK_SEARCH_HPP_
