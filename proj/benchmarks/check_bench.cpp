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

#include <benchmark/benchmark.h>

#include "lambek/bridges.hpp"
#include "lambek/search.hpp"
#include "lambek/serialize.hpp"
#include "lambek/term_replace.hpp"

namespace {

using namespace lambek;

Dertree worked_proof() {
  return *prove(parse_sequent(l_sequent(), "(S/(S/np), (S/inf, inf/np)) |- S"));
}

void BM_CheckProof(benchmark::State& state) {
  Dertree d = worked_proof();
  for (auto _ : state) benchmark::DoNotOptimize(check_proof(d).ok());
}
BENCHMARK(BM_CheckProof);

void BM_GentzenToArrow(benchmark::State& state) {
  Dertree d = worked_proof();
  for (auto _ : state) benchmark::DoNotOptimize(gentzen_to_arrow(d).ok());
}
BENCHMARK(BM_GentzenToArrow);

void BM_JsonRoundTrip(benchmark::State& state) {
  Dertree d = worked_proof();
  for (auto _ : state) benchmark::DoNotOptimize(dertree_from_json(to_json(d)));
}
BENCHMARK(BM_JsonRoundTrip);

// A right comb of n leaves against its full collapse.
void BM_ReplaceCommaDot(benchmark::State& state) {
  Term t = Term::one(Form::atom("a"));
  for (int i = 1; i < state.range(0); ++i) t = Term::comma(Term::one(Form::atom("b")), t);
  Term collapsed = Term::one(delta_translation(t));
  for (auto _ : state) benchmark::DoNotOptimize(decide_replace_comma_dot(t, collapsed));
}
BENCHMARK(BM_ReplaceCommaDot)->RangeMultiplier(4)->Range(4, 256);

void BM_ParseCategory(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_category("((a/b)\\c).(d/(e.f))/g"));
}
BENCHMARK(BM_ParseCategory);

}  // namespace
