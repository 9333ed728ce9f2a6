// Copyright 2026 The Novelty Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "novelty/evolution.hpp"
#include "novelty/funding.hpp"
#include "novelty/moonshot.hpp"
#include "novelty/researcher.hpp"
#include "novelty/specfun.hpp"
#include "novelty/valuation.hpp"

namespace {

using namespace novelty;

void BM_CtildePrimeInv(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::ctilde_prime_inv(x));
    x = x < 100.0 ? x * 1.01 : 0.01;
  }
}
BENCHMARK(BM_CtildePrimeInv);

void BM_ValueOfKnowledge(benchmark::State& state) {
  std::vector<KnowledgePoint> pts;
  for (int i = 0; i < state.range(0); ++i) pts.push_back({1.7 * i, 0.0});
  const KnowledgeSet f = make_knowledge(pts);
  for (auto _ : state) benchmark::DoNotOptimize(value_of_knowledge(f, 1.0));
}
BENCHMARK(BM_ValueOfKnowledge)->Range(8, 4096);

void BM_OptExpand(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(opt_expand({1.0, 1.0}));
}
BENCHMARK(BM_OptExpand);

void BM_OptDeepen(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(opt_deepen(10.0, {1.0, 1.0}));
}
BENCHMARK(BM_OptDeepen);

void BM_ResearcherCutoffs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(researcher_cutoffs({1.0, 1.0}));
}
BENCHMARK(BM_ResearcherCutoffs)->Unit(benchmark::kMillisecond);

void BM_Run(benchmark::State& state) {
  const KnowledgeSet f = make_knowledge({{0.0, 0.0}});
  RunOptions opt;
  opt.force_success = true;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(f, {1.0, 1.0}, 100, ++seed, opt));
}
BENCHMARK(BM_Run)->Unit(benchmark::kMillisecond);

void BM_AssessMoonshot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(assess_moonshot(6.0, {1.0, 1.0}, 0.9));
}
BENCHMARK(BM_AssessMoonshot)->Unit(benchmark::kMicrosecond);

void BM_OptimalMoonshot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimal_moonshot(0.9, {1.0, 1.0}));
}
BENCHMARK(BM_OptimalMoonshot)->Unit(benchmark::kMillisecond);

void BM_OptimizeMyopic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimize_myopic({3, 16, 6, 1}, 1.0));
}
BENCHMARK(BM_OptimizeMyopic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
