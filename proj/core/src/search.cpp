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

#include "lambek/search.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace lambek {
namespace {

struct Key {
  Term ante;
  Form succ;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    return k.ante.hash() * 0x9e3779b97f4a7c15ULL ^ k.succ.hash();
  }
};

const Extension& no_extension() {
  static const Extension kNone("", {}, true);
  return kNone;
}

enum class Verdict : std::uint8_t { kProvable, kDead };

std::vector<Expansion> expansions_in(const Extension& e, const Key& k,
                                     const std::vector<RuleName>& rules) {
  std::vector<Expansion> all;
  for (RuleName r : rules) {
    for (Expansion& x : rule_expansions(e, k.ante, k.succ, r)) all.push_back(std::move(x));
  }
  return all;
}

struct Outcome {
  std::vector<Dertree> proofs;
  // Shallowest ancestor level a loop prune below this node hit.
  int min_ref = INT_MAX;
};

}  // namespace

std::vector<RuleName> default_rule_order() {
  return {RuleName::kSeqAxiom, RuleName::kRightSlash, RuleName::kRightBackslash,
          RuleName::kRightDot, RuleName::kLeftSlash,  RuleName::kLeftBackslash,
          RuleName::kLeftDot,  RuleName::kSeqExt};
}

struct Prover::Impl {
  ExtensionRef ext;
  const Extension* e;
  SearchOptions opts;
  std::unordered_map<Key, Verdict, KeyHash> decided;

  // Per-call search state.
  SearchStats* stats = nullptr;
  bool aborted = false;
  std::unordered_map<Key, int, KeyHash> on_path;
  std::unordered_set<Key, KeyHash> failed;

  const Verdict* status(const Key& k) const {
    auto it = decided.find(k);
    return it == decided.end() ? nullptr : &it->second;
  }

  // Decides every undecided sequent reachable backwards from `root`: least
  // fixpoint of "some expansion has all premises provable". Returns false
  // and decides nothing when the reachable set exceeds max_saturation.
  bool saturate(const Key& root) {
    if (decided.count(root)) return true;
    struct Node {
      Key key;
      // Per expansion: number of premises not yet known provable.
      std::vector<int> pending;
      bool proved = false;
    };
    std::vector<Node> nodes;
    std::unordered_map<Key, int, KeyHash> index;
    // users[i]: (node, expansion) pairs waiting on node i.
    std::vector<std::vector<std::pair<int, int>>> users;
    std::deque<int> ready;

    auto intern = [&](const Key& k) {
      auto [it, inserted] = index.emplace(k, static_cast<int>(nodes.size()));
      if (inserted) {
        nodes.push_back({k, {}, false});
        users.emplace_back();
      }
      return it->second;
    };
    intern(root);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes.size() > opts.max_saturation) return false;
      Key k = nodes[i].key;
      for (const Expansion& x : expansions_in(*e, k, opts.rule_order)) {
        int pending = 0;
        bool dead = false;
        std::vector<int> waits;
        for (const Premise& p : x.premises) {
          Key pk{p.ante, p.succ};
          if (const Verdict* s = status(pk)) {
            if (*s == Verdict::kDead) dead = true;
            continue;
          }
          if (dead) continue;
          int j = intern(pk);
          if (std::find(waits.begin(), waits.end(), j) == waits.end()) {
            waits.push_back(j);
            ++pending;
          }
        }
        if (dead) continue;
        int xi = static_cast<int>(nodes[i].pending.size());
        nodes[i].pending.push_back(pending);
        if (pending == 0) {
          ready.push_back(static_cast<int>(i));
        } else {
          for (int j : waits) users[j].push_back({static_cast<int>(i), xi});
        }
      }
    }
    while (!ready.empty()) {
      int i = ready.front();
      ready.pop_front();
      if (nodes[i].proved) continue;
      nodes[i].proved = true;
      for (auto [u, xi] : users[i]) {
        if (--nodes[u].pending[xi] == 0 && !nodes[u].proved) ready.push_back(u);
      }
    }
    for (const Node& n : nodes)
      decided.emplace(n.key, n.proved ? Verdict::kProvable : Verdict::kDead);
    if (stats) stats->saturated += nodes.size();
    return true;
  }

  bool dead(const Key& k) const {
    const Verdict* s = status(k);
    return s && *s == Verdict::kDead;
  }

  std::vector<Dertree> run(const Key& root, std::size_t want, SearchStats* st) {
    SearchStats local;
    stats = st ? st : &local;
    aborted = false;
    on_path.clear();
    failed.clear();
    if (opts.prune_unprovable && saturate(root) && dead(root)) {
      ++stats->dead_prunes;
      return {};
    }
    std::vector<Dertree> out = solve(root, 1, want).proofs;
    stats = nullptr;
    return out;
  }

  Outcome solve(const Key& k, int level, std::size_t want) {
    Outcome out;
    if (aborted) return out;
    if (opts.max_depth && static_cast<std::size_t>(level) > *opts.max_depth) return out;
    if (opts.loop_check) {
      auto it = on_path.find(k);
      if (it != on_path.end()) {
        ++stats->loop_prunes;
        out.min_ref = it->second;
        return out;
      }
    }
    bool memo = opts.memoize_failures && !opts.max_depth;
    if (memo && failed.count(k)) {
      ++stats->memo_hits;
      return out;
    }
    if (opts.max_expansions && stats->expansions >= opts.max_expansions) {
      stats->budget_exhausted = true;
      aborted = true;
      return out;
    }
    ++stats->expansions;
    if (opts.loop_check) on_path.emplace(k, level);

    for (RuleName r : opts.rule_order) {
      std::vector<Expansion> xs = rule_expansions(*e, k.ante, k.succ, r);
      for (std::size_t xi = 0; xi < xs.size() && out.proofs.size() < want; ++xi) {
        const Expansion& x = xs[xi];
        if (std::find(xs.begin(), xs.begin() + xi, x) != xs.begin() + xi) continue;
        if (opts.prune_unprovable &&
            std::any_of(x.premises.begin(), x.premises.end(),
                        [&](const Premise& p) { return dead({p.ante, p.succ}); })) {
          ++stats->dead_prunes;
          continue;
        }
        expand(k, r, x, level, want - out.proofs.size(), out);
        if (aborted) break;
      }
      if (out.proofs.size() >= want || aborted) break;
    }

    if (opts.loop_check) on_path.erase(k);
    if (memo && !aborted && out.proofs.empty() && out.min_ref >= level) failed.insert(k);
    return out;
  }

  void expand(const Key& k, RuleName r, const Expansion& x, int level, std::size_t want,
              Outcome& out) {
    std::vector<std::vector<Dertree>> kids;
    kids.reserve(x.premises.size());
    for (const Premise& p : x.premises) {
      Outcome sub = solve({p.ante, p.succ}, level + 1, want);
      if (sub.proofs.empty()) {
        out.min_ref = std::min(out.min_ref, sub.min_ref);
        return;
      }
      kids.push_back(std::move(sub.proofs));
    }
    Sequent s{ext, k.ante, k.succ};
    // Cartesian product of premise proofs, last premise varying fastest.
    std::vector<std::size_t> idx(kids.size(), 0);
    while (want > 0) {
      std::vector<Dertree> children;
      children.reserve(kids.size());
      for (std::size_t i = 0; i < kids.size(); ++i) children.push_back(kids[i][idx[i]]);
      out.proofs.push_back(Dertree::der(s, r, std::move(children)));
      --want;
      std::size_t i = kids.size();
      for (;;) {
        if (i == 0) return;
        --i;
        if (++idx[i] < kids[i].size()) break;
        idx[i] = 0;
      }
    }
  }
};

Prover::Prover(ExtensionRef ext, SearchOptions opts) : impl_(std::make_unique<Impl>()) {
  for (RuleName r : opts.rule_order) {
    if (r == RuleName::kCutRule) throw PreconditionError("rule_order must not contain CutRule");
    if (std::count(opts.rule_order.begin(), opts.rule_order.end(), r) > 1) {
      throw PreconditionError(std::string("rule_order repeats ") + to_string(r));
    }
  }
  if (opts.max_solutions == 0) throw PreconditionError("max_solutions must be at least 1");
  impl_->ext = std::move(ext);
  impl_->e = impl_->ext ? impl_->ext.get() : &no_extension();
  impl_->opts = std::move(opts);
}

Prover::~Prover() = default;

const ExtensionRef& Prover::ext() const { return impl_->ext; }
const SearchOptions& Prover::options() const { return impl_->opts; }

std::vector<Dertree> Prover::prove_all(Term ante, Form succ, SearchStats* stats) {
  return impl_->run({ante, succ}, impl_->opts.max_solutions, stats);
}

std::optional<Dertree> Prover::prove(Term ante, Form succ, SearchStats* stats) {
  std::vector<Dertree> found = impl_->run({ante, succ}, 1, stats);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::optional<bool> Prover::provable(Term ante, Form succ) {
  Key k{ante, succ};
  if (!impl_->saturate(k)) return std::nullopt;
  return !impl_->dead(k);
}

std::vector<Dertree> prove_all(const Sequent& s, const SearchOptions& opts, SearchStats* stats) {
  Prover p(s.ext, opts);
  return p.prove_all(s.ante, s.succ, stats);
}

std::optional<Dertree> prove(const Sequent& s, const SearchOptions& opts, SearchStats* stats) {
  Prover p(s.ext, opts);
  return p.prove(s.ante, s.succ, stats);
}

// ---- oracle ----

struct Oracle::Impl {
  ExtensionRef ext;
  const Extension* e;
  // Smallest depth known to prove a sequent, and largest known to fail.
  std::unordered_map<Key, std::size_t, KeyHash> proved_at;
  std::unordered_map<Key, std::size_t, KeyHash> failed_at;
  std::unordered_map<Key, std::vector<Expansion>, KeyHash> steps;

  bool prov(const Key& k, std::size_t d) {
    if (d == 0) return false;
    if (auto it = proved_at.find(k); it != proved_at.end() && it->second <= d) return true;
    if (auto it = failed_at.find(k); it != failed_at.end() && it->second >= d) return false;
    auto it = steps.find(k);
    if (it == steps.end()) {
      static const std::vector<RuleName> kRules = default_rule_order();
      it = steps.emplace(k, expansions_in(*e, k, kRules)).first;
    }
    // Copy: the table may rehash during recursion.
    std::vector<Expansion> xs = it->second;
    for (const Expansion& x : xs) {
      bool all = std::all_of(x.premises.begin(), x.premises.end(),
                             [&](const Premise& p) { return prov({p.ante, p.succ}, d - 1); });
      if (all) {
        auto [pt, inserted] = proved_at.emplace(k, d);
        if (!inserted) pt->second = std::min(pt->second, d);
        return true;
      }
    }
    auto [ft, inserted] = failed_at.emplace(k, d);
    if (!inserted) ft->second = std::max(ft->second, d);
    return false;
  }
};

Oracle::Oracle(ExtensionRef ext) : impl_(std::make_unique<Impl>()) {
  impl_->ext = std::move(ext);
  impl_->e = impl_->ext ? impl_->ext.get() : &no_extension();
}

Oracle::~Oracle() = default;

bool Oracle::provable(Term ante, Form succ, std::size_t depth) {
  return impl_->prov({ante, succ}, depth);
}

std::size_t Oracle::table_size() const { return impl_->proved_at.size() + impl_->failed_at.size(); }

bool oracle_provable(const Sequent& s, std::size_t depth) {
  Oracle o(s.ext);
  return o.provable(s.ante, s.succ, depth);
}

}  // namespace lambek
