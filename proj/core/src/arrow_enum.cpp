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

#include "lambek/arrow_enum.hpp"

#include <unordered_map>

namespace lambek {

namespace {

// Rule kinds recorded per claim; the premise is recomputed from the claim.
enum class Step : std::uint8_t { kExt, kBeta, kBetaInv, kGamma, kGammaInv, kComp };

struct Entry {
  std::uint16_t depth;
  Step step;
  // Rule index for kExt, mid id for kComp.
  std::int32_t aux;
};

constexpr int kSlash = 0;
constexpr int kBackslash = 1;
constexpr int kDot = 2;

std::uint64_t key(std::int32_t a, std::int32_t b) {
  return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

Form compose(int op, Form l, Form r) {
  if (op == kSlash) return Form::slash(l, r);
  if (op == kBackslash) return Form::backslash(l, r);
  return Form::dot(l, r);
}

int op_of(Form f) {
  switch (f.kind()) {
    case Form::Kind::kSlash:
      return kSlash;
    case Form::Kind::kBackslash:
      return kBackslash;
    case Form::Kind::kDot:
      return kDot;
    default:
      return -1;
  }
}

}  // namespace

struct ArrowEnumeration::Impl {
  ArrowExtension x;
  ArrowEnumOptions opts;

  // Ids: atoms first, then op(l, r) over the degree max_degree - 1 forms
  // `base`, as atoms + (op * m + l) * m + r.
  std::vector<Form> atoms;
  std::vector<Form> base;
  std::unordered_map<Form, std::int32_t> base_index;
  std::vector<std::int32_t> base_id;
  std::vector<std::int32_t> down;
  std::int64_t m = 0;
  std::int32_t n = 0;

  std::unordered_map<std::uint64_t, Entry> found;
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::vector<std::int32_t>> in;
  std::size_t reached = 1;
  bool fixpoint = false;

  std::int32_t n_atoms() const { return std::int32_t(atoms.size()); }
  bool flat() const { return opts.max_degree <= 1; }

  int op(std::int32_t id) const { return id < n_atoms() ? -1 : int((id - n_atoms()) / (m * m)); }
  std::int32_t lo(std::int32_t id) const { return std::int32_t(((id - n_atoms()) / m) % m); }
  std::int32_t ro(std::int32_t id) const { return std::int32_t((id - n_atoms()) % m); }
  std::int32_t left(std::int32_t id) const { return base_id[lo(id)]; }
  std::int32_t right(std::int32_t id) const { return base_id[ro(id)]; }

  std::int32_t make(int o, std::int32_t l, std::int32_t r) const {
    if (flat() || l < 0 || r < 0) return -1;
    std::int32_t bl = down[l];
    std::int32_t br = down[r];
    if (bl < 0 || br < 0) return -1;
    return std::int32_t(n_atoms() + (o * m + bl) * m + br);
  }

  Form decode(std::int32_t id) const {
    if (id < n_atoms()) return atoms[id];
    return compose(op(id), base[lo(id)], base[ro(id)]);
  }

  std::int32_t encode(Form f) const {
    if (f.is_atom()) {
      for (std::int32_t i = 0; i < n_atoms(); ++i) {
        if (atoms[i] == f) return i;
      }
      return -1;
    }
    if (flat()) return -1;
    auto l = base_index.find(f.left());
    auto r = base_index.find(f.right());
    if (l == base_index.end() || r == base_index.end()) return -1;
    return std::int32_t(n_atoms() + (op_of(f) * m + l->second) * m + r->second);
  }

  // match() on decode(id) without interning the whole universe.
  bool match_id(const FormPattern& p, std::int32_t id, Bindings& bind) const {
    using K = FormPattern::Kind;
    if (p.kind == K::kMeta) return match(p, decode(id), bind);
    if (p.kind == K::kAtom) return id < n_atoms() && atoms[id].name() == p.name;
    int want = p.kind == K::kSlash ? kSlash : p.kind == K::kBackslash ? kBackslash : kDot;
    if (op(id) != want) return false;
    return match(p.args[0], base[lo(id)], bind) && match(p.args[1], base[ro(id)], bind);
  }

  void build_universe() {
    for (const std::string& a : opts.atoms) atoms.push_back(Form::atom(a));
    if (opts.max_degree < 1) throw PreconditionError("arrow enumeration: max_degree must be >= 1");
    if (atoms.empty()) throw PreconditionError("arrow enumeration: no atoms");
    base = atoms;
    for (int d = 2; d < opts.max_degree; ++d) {
      if (3 * base.size() * base.size() + atoms.size() > opts.max_universe) break;
      std::vector<Form> next = atoms;
      for (Form l : base) {
        for (Form r : base) {
          for (int o : {kSlash, kBackslash, kDot}) next.push_back(compose(o, l, r));
        }
      }
      base = std::move(next);
    }
    m = std::int64_t(base.size());
    std::size_t total = flat() ? atoms.size() : atoms.size() + std::size_t(3 * m * m);
    if (total > opts.max_universe) {
      throw PreconditionError("arrow enumeration: universe of " + std::to_string(total) +
                              " forms exceeds the limit");
    }
    n = std::int32_t(total);
    for (std::int32_t i = 0; i < std::int32_t(base.size()); ++i) base_index.emplace(base[i], i);
    down.assign(n, -1);
    for (std::int32_t i = 0; i < std::int32_t(base.size()); ++i) {
      std::int32_t id = encode(base[i]);
      base_id.push_back(id);
      down[id] = i;
    }
    out.resize(n);
    in.resize(n);
  }

  bool add(std::int32_t a, std::int32_t b, std::size_t depth, Step s, std::int32_t aux,
           std::vector<std::pair<std::int32_t, std::int32_t>>& fresh) {
    if (a < 0 || b < 0 || a == b) return false;
    auto [it, inserted] = found.emplace(key(a, b), Entry{std::uint16_t(depth), s, aux});
    if (inserted) fresh.emplace_back(a, b);
    return inserted;
  }

  // Unary rules applied to a claim s -> c found at the previous level.
  void unary(std::int32_t s, std::int32_t c, std::size_t d,
             std::vector<std::pair<std::int32_t, std::int32_t>>& fresh) {
    if (op(s) == kDot) {
      add(left(s), make(kSlash, c, right(s)), d, Step::kBeta, 0, fresh);
      add(right(s), make(kBackslash, left(s), c), d, Step::kGamma, 0, fresh);
    }
    if (op(c) == kSlash) add(make(kDot, s, right(c)), left(c), d, Step::kBetaInv, 0, fresh);
    if (op(c) == kBackslash) add(make(kDot, left(c), s), right(c), d, Step::kGammaInv, 0, fresh);
  }

  void run() {
    std::vector<std::pair<std::int32_t, std::int32_t>> frontier;
    // identities are implicit at depth 1
    for (std::int32_t r = 0; r < std::int32_t(x.rules.size()); ++r) {
      const ArrowRule& rule = x.rules[r];
      for (std::int32_t a = 0; a < n; ++a) {
        Bindings bind;
        if (!match_id(rule.lhs, a, bind)) continue;
        std::optional<Form> rhs = instantiate(rule.rhs, bind);
        if (!rhs) continue;
        add(a, encode(*rhs), 1, Step::kExt, r, frontier);
      }
    }
    bool first = true;
    for (std::size_t d = 2; d <= opts.max_depth; ++d) {
      for (auto [a, b] : frontier) {
        out[a].push_back(b);
        in[b].push_back(a);
      }
      std::vector<std::pair<std::int32_t, std::int32_t>> fresh;
      if (first) {
        for (std::int32_t a = 0; a < n; ++a) unary(a, a, d, fresh);
        first = false;
      }
      for (auto [s, c] : frontier) unary(s, c, d, fresh);
      for (auto [a, mid] : frontier) {
        for (std::int32_t c : out[mid]) add(a, c, d, Step::kComp, mid, fresh);
      }
      for (auto [mid, c] : frontier) {
        for (std::int32_t a : in[mid]) add(a, c, d, Step::kComp, mid, fresh);
      }
      if (fresh.empty()) {
        fixpoint = true;
        return;
      }
      reached = d;
      frontier = std::move(fresh);
    }
  }

  ArrowProof rebuild(std::int32_t a, std::int32_t b) const {
    if (a == b) return ArrowProof::one(decode(a));
    const Entry& e = found.at(key(a, b));
    switch (e.step) {
      case Step::kExt:
        return ArrowProof::ext(x.rules[e.aux].name, decode(a), decode(b));
      case Step::kBeta:
        return ArrowProof::beta(rebuild(make(kDot, a, right(b)), left(b)));
      case Step::kGamma:
        return ArrowProof::gamma(rebuild(make(kDot, left(b), a), right(b)));
      case Step::kBetaInv:
        return ArrowProof::beta_inv(rebuild(left(a), make(kSlash, b, right(a))));
      case Step::kGammaInv:
        return ArrowProof::gamma_inv(rebuild(right(a), make(kBackslash, left(a), b)));
      case Step::kComp:
        return ArrowProof::comp(rebuild(a, e.aux), rebuild(e.aux, b));
    }
    throw LambekError("arrow enumeration: corrupt entry");
  }
};

ArrowEnumeration::ArrowEnumeration(ArrowExtension x, ArrowEnumOptions opts)
    : impl_(std::make_unique<Impl>()) {
  impl_->x = std::move(x);
  impl_->opts = std::move(opts);
  impl_->build_universe();
  impl_->run();
}

ArrowEnumeration::~ArrowEnumeration() = default;
ArrowEnumeration::ArrowEnumeration(ArrowEnumeration&&) noexcept = default;
ArrowEnumeration& ArrowEnumeration::operator=(ArrowEnumeration&&) noexcept = default;

std::size_t ArrowEnumeration::universe_size() const { return std::size_t(impl_->n); }
std::size_t ArrowEnumeration::size() const { return impl_->found.size() + std::size_t(impl_->n); }
std::size_t ArrowEnumeration::depth_reached() const { return impl_->reached; }
bool ArrowEnumeration::saturated() const { return impl_->fixpoint; }

bool ArrowEnumeration::in_universe(Form f) const {
  return f.degree() <= impl_->opts.max_degree && impl_->encode(f) >= 0;
}

std::optional<std::size_t> ArrowEnumeration::min_depth(Form a, Form b) const {
  if (!in_universe(a) || !in_universe(b)) return std::nullopt;
  std::int32_t ia = impl_->encode(a);
  std::int32_t ib = impl_->encode(b);
  if (ia == ib) return 1;
  auto it = impl_->found.find(key(ia, ib));
  if (it == impl_->found.end()) return std::nullopt;
  return it->second.depth;
}

std::optional<ArrowProof> ArrowEnumeration::find(Form a, Form b) const {
  if (!min_depth(a, b)) return std::nullopt;
  return impl_->rebuild(impl_->encode(a), impl_->encode(b));
}

}  // namespace lambek
