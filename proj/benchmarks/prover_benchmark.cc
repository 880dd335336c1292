/* Copyright 2026 The Lambek Brackets Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <vector>

#include "benchmark/benchmark.h"
#include "lambek/enumerator.h"
#include "lambek/prover.h"
#include "lambek/text_io.h"
#include "lambek/translate.h"

namespace lambek {
namespace {

// Decides every sequent of the size-n enumeration with a fresh session.
void BM_DecideEnumeration(benchmark::State& state) {
  const auto cal = static_cast<CalculusId>(state.range(1));
  const auto goals = enumerate_sequents(
      {static_cast<int>(state.range(0)), 1, cal != CalculusId::kLbStar, true, 2});
  for (auto _ : state) {
    Prover prover(cal);
    std::size_t yes = 0;
    for (const Sequent& s : goals) yes += prover.derivable(s) ? 1 : 0;
    benchmark::DoNotOptimize(yes);
  }
  state.counters["sequents"] = static_cast<double>(goals.size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(goals.size()));
}
BENCHMARK(BM_DecideEnumeration)
    ->ArgsProduct({{4, 5}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

// Translated sequents are several times larger than their sources.
void BM_DecideTranslated(benchmark::State& state) {
  std::vector<Sequent> goals;
  for (const Sequent& s : enumerate_sequents(
           {static_cast<int>(state.range(0)), 1, true, true, 2})) {
    goals.push_back(translate_sequent(s).sequent);
  }
  for (auto _ : state) {
    Prover prover(CalculusId::kLbStar);
    std::size_t yes = 0;
    for (const Sequent& s : goals) yes += prover.derivable(s) ? 1 : 0;
    benchmark::DoNotOptimize(yes);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(goals.size()));
}
BENCHMARK(BM_DecideTranslated)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PruningAblation(benchmark::State& state) {
  const auto goals = enumerate_sequents({5, 1, true, true, 2});
  SearchConfig cfg;
  cfg.count_pruning = state.range(0) != 0;
  for (auto _ : state) {
    Prover prover(CalculusId::kLbStarOne, cfg);
    std::size_t yes = 0;
    for (const Sequent& s : goals) yes += prover.derivable(s) ? 1 : 0;
    benchmark::DoNotOptimize(yes);
  }
}
BENCHMARK(BM_PruningAblation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LongChain(benchmark::State& state) {
  // p1, p1\p2, p2\p3, ... -> pn.
  const int n = static_cast<int>(state.range(0));
  Structure ante{Formula::Var(1)};
  for (int i = 1; i < n; ++i) {
    const Formula f = Formula::Under(Formula::Var(i), Formula::Var(i + 1));
    ante.items.push_back(Item::Atom(f));
  }
  const Sequent goal{ante, Formula::Var(n)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivable(goal, CalculusId::kLbStar));
  }
}
BENCHMARK(BM_LongChain)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
}  // namespace lambek

BENCHMARK_MAIN();
