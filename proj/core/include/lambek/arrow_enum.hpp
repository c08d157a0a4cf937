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

#ifndef LAMBEK_ARROW_ENUM_HPP_
#define LAMBEK_ARROW_ENUM_HPP_

// Bounded enumeration of arrow proofs.
//
// The universe is every form of degree <= max_degree over the given atoms.
// Level d holds each claim A -> B (both in the universe) that has an arrow
// proof of tree depth <= d whose formulas all lie in the universe. Levels
// are computed semi-naively until max_depth or a fixpoint.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lambek/arrow.hpp"

namespace lambek {

struct ArrowEnumOptions {
  std::size_t max_depth = 6;
  int max_degree = 4;
  std::vector<std::string> atoms = {"a", "b"};
  // Refuse universes larger than this many forms.
  std::size_t max_universe = std::size_t{1} << 22;
};

class ArrowEnumeration {
 public:
  ArrowEnumeration(ArrowExtension x, ArrowEnumOptions opts = {});
  ~ArrowEnumeration();
  ArrowEnumeration(ArrowEnumeration&&) noexcept;
  ArrowEnumeration& operator=(ArrowEnumeration&&) noexcept;

  std::size_t universe_size() const;
  // Number of claims found, identities included.
  std::size_t size() const;
  // Last level that added a claim; equals max_depth unless saturated.
  std::size_t depth_reached() const;
  bool saturated() const;

  bool in_universe(Form f) const;
  std::optional<std::size_t> min_depth(Form a, Form b) const;
  // A proof of minimal depth, or nullopt outside the bounds.
  std::optional<ArrowProof> find(Form a, Form b) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lambek

#endif  // LAMBEK_ARROW_ENUM_HPP_
