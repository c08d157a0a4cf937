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

#include "lambek/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lambek {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

std::string dump(const json& j, int indent) { return j.dump(indent < 0 ? -1 : indent); }

const json& field(const json& j, const char* name, const char* where) {
  if (!j.is_object()) throw FormatError(std::string(where) + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string(where) + ": missing \"" + name + "\"");
  return *it;
}

std::string text_field(const json& j, const char* name, const char* where) {
  const json& v = field(j, name, where);
  if (!v.is_string()) throw FormatError(std::string(where) + ": \"" + name + "\" must be a string");
  return v.get<std::string>();
}

const json* optional_field(const json& j, const char* name) {
  auto it = j.find(name);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const json& children_of(const json& j, const char* where) {
  static const json kNone = json::array();
  const json* c = optional_field(j, "children");
  if (!c) return kNone;
  if (!c->is_array()) throw FormatError(std::string(where) + ": \"children\" must be an array");
  return *c;
}

Form form_field(const json& j, const char* name, const char* where) {
  return parse_category(text_field(j, name, where));
}

Term term_field(const json& j, const char* name, const char* where) {
  return parse_term(text_field(j, name, where));
}

// ---- extensions ----

json extension_json(const Extension& e) {
  json rules = json::array();
  for (const StructRule& r : e.rules()) {
    rules.push_back(
        {{"name", r.name}, {"lhs", render_pattern(r.lhs)}, {"rhs", render_pattern(r.rhs)}});
  }
  return {{"name", e.name()}, {"cond_cut", e.cond_cut()}, {"rules", rules}};
}

ExtensionRef extension_of(const json& j) {
  const char* where = "extension";
  std::string name = text_field(j, "name", where);
  bool cond_cut = false;
  if (const json* c = optional_field(j, "cond_cut")) {
    if (!c->is_boolean()) throw FormatError("extension: \"cond_cut\" must be a boolean");
    cond_cut = c->get<bool>();
  }
  std::vector<StructRule> rules;
  if (const json* rs = optional_field(j, "rules")) {
    if (!rs->is_array()) throw FormatError("extension: \"rules\" must be an array");
    for (const json& r : *rs) {
      rules.push_back({text_field(r, "name", "extension rule"),
                       parse_term_pattern(text_field(r, "lhs", "extension rule")),
                       parse_term_pattern(text_field(r, "rhs", "extension rule"))});
    }
  }
  return make_extension(std::move(name), std::move(rules), cond_cut);
}

json ext_ref_json(const ExtensionRef& e) {
  if (!e) return nullptr;
  ExtensionRef b = builtin_extension(e->name());
  if (b && same_extension(*b, *e) && b->cond_cut() == e->cond_cut()) return e->name();
  return extension_json(*e);
}

// Reuses one ExtensionRef per distinct description within a document.
class ExtensionCache {
 public:
  ExtensionRef get(const json& j) {
    if (j.is_null()) return nullptr;
    if (j.is_string()) {
      ExtensionRef e = builtin_extension(j.get<std::string>());
      if (!e) throw FormatError("unknown extension \"" + j.get<std::string>() + "\"");
      return e;
    }
    std::string key = j.dump();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ExtensionRef e = extension_of(j);
    cache_.emplace(std::move(key), e);
    return e;
  }

 private:
  std::map<std::string, ExtensionRef> cache_;
};

// ---- sequent trees ----

json sequent_json(const Sequent& s) {
  return {{"ext", ext_ref_json(s.ext)},
          {"ante", render_term(s.ante)},
          {"succ", render_category(s.succ)}};
}

json dertree_json(const Dertree& d) {
  if (d.is_unf()) return {{"unf", {{"seq", sequent_json(d.seq)}}}};
  json kids = json::array();
  for (const Dertree& c : d.children) kids.push_back(dertree_json(c));
  return {
      {"der", {{"seq", sequent_json(d.seq)}, {"rule", to_string(*d.rule)}, {"children", kids}}}};
}

Sequent sequent_of(const json& j, ExtensionCache& exts) {
  const char* where = "sequent";
  const json* e = optional_field(j, "ext");
  return {e ? exts.get(*e) : nullptr, term_field(j, "ante", where), form_field(j, "succ", where)};
}

Dertree dertree_of(const json& j, ExtensionCache& exts) {
  if (!j.is_object() || j.size() != 1) {
    throw FormatError("dertree: expected {\"der\": ...} or {\"unf\": ...}");
  }
  if (auto it = j.find("unf"); it != j.end()) {
    return Dertree::unf(sequent_of(field(*it, "seq", "unf"), exts));
  }
  auto it = j.find("der");
  if (it == j.end()) throw FormatError("dertree: expected {\"der\": ...} or {\"unf\": ...}");
  const json& node = *it;
  std::string rule = text_field(node, "rule", "der");
  std::optional<RuleName> r = parse_rule_name(rule);
  if (!r) throw FormatError("dertree: unknown rule \"" + rule + "\"");
  std::vector<Dertree> kids;
  for (const json& c : children_of(node, "der")) kids.push_back(dertree_of(c, exts));
  return Dertree::der(sequent_of(field(node, "seq", "der"), exts), *r, std::move(kids));
}

// ---- arrows ----

json arrow_ext_json(const ArrowExtension& x) {
  json rules = json::array();
  for (const ArrowRule& r : x.rules) {
    rules.push_back(
        {{"name", r.name}, {"lhs", render_pattern(r.lhs)}, {"rhs", render_pattern(r.rhs)}});
  }
  return {{"name", x.name}, {"rules", rules}};
}

ArrowExtension arrow_ext_of(const json& j) {
  if (j.is_string()) {
    const ArrowExtension* b = builtin_arrow_extension(j.get<std::string>());
    if (!b) throw FormatError("unknown arrow extension \"" + j.get<std::string>() + "\"");
    return *b;
  }
  ArrowExtension x{text_field(j, "name", "arrow extension"), {}};
  if (const json* rs = optional_field(j, "rules")) {
    if (!rs->is_array()) throw FormatError("arrow extension: \"rules\" must be an array");
    for (const json& r : *rs) {
      x.rules.push_back({text_field(r, "name", "arrow rule"),
                         parse_form_pattern(text_field(r, "lhs", "arrow rule")),
                         parse_form_pattern(text_field(r, "rhs", "arrow rule"))});
    }
  }
  return x;
}

json arrow_json(const ArrowProof& p) {
  json j = {{"kind", to_string(p.kind)},
            {"source", render_category(p.source)},
            {"target", render_category(p.target)}};
  if (p.mid) j["mid"] = render_category(*p.mid);
  if (!p.rule.empty()) j["rule"] = p.rule;
  if (!p.children.empty()) {
    json kids = json::array();
    for (const ArrowProof& c : p.children) kids.push_back(arrow_json(c));
    j["children"] = kids;
  }
  return j;
}

ArrowProof arrow_of(const json& j) {
  const char* where = "arrow node";
  std::string kind = text_field(j, "kind", where);
  std::optional<ArrowProof::Kind> k = parse_arrow_kind(kind);
  if (!k) throw FormatError("arrow node: unknown kind \"" + kind + "\"");
  ArrowProof p{*k, form_field(j, "source", where), form_field(j, "target", where), {}, std::nullopt,
               {}};
  if (optional_field(j, "mid")) p.mid = form_field(j, "mid", where);
  if (optional_field(j, "rule")) p.rule = text_field(j, "rule", where);
  for (const json& c : children_of(j, where)) p.children.push_back(arrow_of(c));
  return p;
}

// ---- natural deduction ----

json natded_json(const NatDedNode& n) {
  json j = {{"kind", to_string(n.kind)},
            {"ante", render_term(n.ante)},
            {"succ", render_category(n.succ)}};
  if (n.b) j["b"] = render_category(*n.b);
  if (n.path) j["path"] = n.path->to_string();
  if (!n.rule.empty()) j["rule"] = n.rule;
  if (!n.children.empty()) {
    json kids = json::array();
    for (const NatDedNode& c : n.children) kids.push_back(natded_json(c));
    j["children"] = kids;
  }
  return j;
}

NatDedNode natded_of(const json& j) {
  const char* where = "natded node";
  std::string kind = text_field(j, "kind", where);
  std::optional<NatDedNode::Kind> k = parse_natded_kind(kind);
  if (!k) throw FormatError("natded node: unknown kind \"" + kind + "\"");
  NatDedNode n{*k,
               term_field(j, "ante", where),
               form_field(j, "succ", where),
               {},
               std::nullopt,
               std::nullopt,
               {}};
  if (optional_field(j, "b")) n.b = form_field(j, "b", where);
  if (optional_field(j, "path")) n.path = Path::from_string(text_field(j, "path", where));
  if (optional_field(j, "rule")) n.rule = text_field(j, "rule", where);
  for (const json& c : children_of(j, where)) n.children.push_back(natded_of(c));
  return n;
}

template <typename F>
auto wrap_syntax(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

const char* to_string(ProofSystem s) {
  switch (s) {
    case ProofSystem::kGentzen:
      return "gentzen";
    case ProofSystem::kArrow:
      return "arrow";
    case ProofSystem::kNatDed:
      return "natded";
  }
  return "?";
}

std::optional<ProofSystem> parse_proof_system(std::string_view text) {
  for (ProofSystem s : {ProofSystem::kGentzen, ProofSystem::kArrow, ProofSystem::kNatDed}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

std::string to_json(const Dertree& d, int indent) { return dump(dertree_json(d), indent); }

Dertree dertree_from_json(std::string_view text) {
  json j = parse_json(text);
  ExtensionCache exts;
  return wrap_syntax([&] { return dertree_of(j, exts); });
}

std::string to_json(const Extension& e, int indent) { return dump(extension_json(e), indent); }

ExtensionRef extension_from_json(std::string_view text) {
  json j = parse_json(text);
  return wrap_syntax([&] { return extension_of(j); });
}

ExtensionRef resolve_extension(std::string_view spec) {
  if (!spec.empty() && spec.front() == '@') {
    return extension_from_json(read_file(std::string(spec.substr(1))));
  }
  ExtensionRef e = builtin_extension(spec);
  if (!e) {
    throw FormatError("unknown extension \"" + std::string(spec) +
                      "\"; expected NL, L, NLP, LP or @file.json");
  }
  return e;
}

std::string to_json(const ArrowExtension& x, int indent) { return dump(arrow_ext_json(x), indent); }

ArrowExtension arrow_extension_from_json(std::string_view text) {
  json j = parse_json(text);
  return wrap_syntax([&] { return arrow_ext_of(j); });
}

std::string to_json(const ArrowDocument& doc, int indent) {
  json j = {{"arrow", {{"ext", arrow_ext_json(doc.ext)}, {"proof", arrow_json(doc.proof)}}}};
  return dump(j, indent);
}

ArrowDocument arrow_from_json(std::string_view text) {
  json j = parse_json(text);
  return wrap_syntax([&] {
    const json& body = field(j, "arrow", "arrow document");
    return ArrowDocument{arrow_ext_of(field(body, "ext", "arrow document")),
                         arrow_of(field(body, "proof", "arrow document"))};
  });
}

std::string to_json(const NatDedProof& p, int indent) {
  json j = {{"natded", {{"ext", ext_ref_json(p.ext)}, {"proof", natded_json(p.root)}}}};
  return dump(j, indent);
}

NatDedProof natded_from_json(std::string_view text) {
  json j = parse_json(text);
  return wrap_syntax([&] {
    const json& body = field(j, "natded", "natded document");
    ExtensionCache exts;
    const json* e = optional_field(body, "ext");
    return NatDedProof{e ? exts.get(*e) : nullptr,
                       natded_of(field(body, "proof", "natded document"))};
  });
}

ProofSystem detect_system(std::string_view text) {
  json j = parse_json(text);
  if (j.is_object()) {
    if (j.contains("der") || j.contains("unf")) return ProofSystem::kGentzen;
    if (j.contains("arrow")) return ProofSystem::kArrow;
    if (j.contains("natded")) return ProofSystem::kNatDed;
  }
  throw FormatError(
      "not a proof document: expected a \"der\", \"unf\", \"arrow\" or \"natded\" key");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LambekError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lambek
