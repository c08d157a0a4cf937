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

#ifndef LAMBEK_SERIALIZE_HPP_
#define LAMBEK_SERIALIZE_HPP_

// JSON forms of proofs and extensions. Categories and terms are stored in
// their text syntax.
//
//   Dertree    {"der": {"seq": {"ext", "ante", "succ"}, "rule", "children"}}
//              {"unf": {"seq": {...}}}
//   Extension  {"name", "cond_cut", "rules": [{"name", "lhs", "rhs"}]}
//   arrow      {"arrow": {"ext": {"name", "rules"}, "proof": node}}
//              node = {"kind", "source", "target", "children", "mid", "rule"}
//   natded     {"natded": {"ext", "proof": node}}
//              node = {"kind", "ante", "succ", "children", "b", "path", "rule"}
//
// A sequent's "ext" is a built-in name when the extension is that built-in,
// and an Extension object otherwise.

#include <string>
#include <string_view>

#include "lambek/arrow.hpp"
#include "lambek/dertree.hpp"
#include "lambek/natded.hpp"

namespace lambek {

// Well-formed JSON with the wrong shape. Malformed JSON is a SyntaxError.
class FormatError : public LambekError {
 public:
  using LambekError::LambekError;
};

enum class ProofSystem { kGentzen, kArrow, kNatDed };

const char* to_string(ProofSystem s);
std::optional<ProofSystem> parse_proof_system(std::string_view text);

std::string to_json(const Dertree& d, int indent = 2);
Dertree dertree_from_json(std::string_view text);

std::string to_json(const Extension& e, int indent = 2);
ExtensionRef extension_from_json(std::string_view text);
// A built-in name, or "@path" to an Extension JSON file.
ExtensionRef resolve_extension(std::string_view spec);

std::string to_json(const ArrowExtension& x, int indent = 2);
ArrowExtension arrow_extension_from_json(std::string_view text);

struct ArrowDocument {
  ArrowExtension ext;
  ArrowProof proof;
};

std::string to_json(const ArrowDocument& doc, int indent = 2);
ArrowDocument arrow_from_json(std::string_view text);

std::string to_json(const NatDedProof& p, int indent = 2);
NatDedProof natded_from_json(std::string_view text);

// The system a proof document belongs to, from its top-level key.
ProofSystem detect_system(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace lambek

#endif  // LAMBEK_SERIALIZE_HPP_
