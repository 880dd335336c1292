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

#include "benchmark/benchmark.h"
#include "lambek/enumerator.h"
#include "lambek/grammar.h"
#include "lambek/text_io.h"

namespace lambek {
namespace {

void BM_EnumerateSequents(benchmark::State& state) {
  const EnumSpec spec{static_cast<int>(state.range(0)), 1, true, true, 2};
  std::size_t n = 0;
  for (auto _ : state) {
    n = enumerate_sequents(spec).size();
    benchmark::DoNotOptimize(n);
  }
  state.counters["sequents"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateSequents)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_RoundTripText(benchmark::State& state) {
  const auto seqs = enumerate_sequents({5, 2, true, true, 2});
  for (auto _ : state) {
    std::size_t ok = 0;
    for (const Sequent& s : seqs) ok += parse_sequent(format_sequent(s)) == s;
    benchmark::DoNotOptimize(ok);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seqs.size()));
}
BENCHMARK(BM_RoundTripText)->Unit(benchmark::kMillisecond);

void BM_Bracketings(benchmark::State& state) {
  const std::vector<Formula> formulas(static_cast<std::size_t>(state.range(0)),
                                      Formula::Var(1));
  BracketBudget budget;
  budget.max_pairs = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_bracketings(formulas, budget).size());
  }
}
BENCHMARK(BM_Bracketings)->ArgsProduct({{3, 5}, {2, 4}});

}  // namespace
}  // namespace lambek

BENCHMARK_MAIN();
