// Copyright 2026 The qbfgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "qbfgames/formula.h"
#include "qbfgames/instances.h"
#include "qbfgames/reductions.h"
#include "qbfgames/solver.h"

namespace qbfgames {
namespace {

Position RandomCnfPosition(std::size_t n, const RulesetConfig& config, std::uint64_t seed) {
  Random rng(seed);
  return Position(CnfToFormula(RandomCnf(n, 2 * n, std::min<std::size_t>(3, n), rng)), n,
                  config);
}

void BM_MemoSolveEitherAnywhereDifferent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Position p = RandomCnfPosition(
      n, {BooleanChoice::kEither, Locality::kAnywhere, Goal::kDifferent}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(p).winner);
}
BENCHMARK(BM_MemoSolveEitherAnywhereDifferent)->DenseRange(4, 10, 2);

void BM_MemoSolveQbf(benchmark::State& state) {
  const Position p = RandomCnfPosition(static_cast<std::size_t>(state.range(0)),
                                       kQbfRuleset, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(p).winner);
}
BENCHMARK(BM_MemoSolveQbf)->RangeMultiplier(2)->Range(4, 16);

void BM_NaiveSolveQbf(benchmark::State& state) {
  const Position p = RandomCnfPosition(static_cast<std::size_t>(state.range(0)),
                                       kQbfRuleset, 2);
  for (auto _ : state) benchmark::DoNotOptimize(SolveNaive(p).winner);
}
BENCHMARK(BM_NaiveSolveQbf)->DenseRange(4, 12, 4);

void BM_SimulateLocalByPlayer(benchmark::State& state) {
  const Position p = RandomCnfPosition(
      static_cast<std::size_t>(state.range(0)),
      {BooleanChoice::kByPlayer, Locality::kLocal, Goal::kDifferent}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(SimulateLocalByPlayer(p).outcome.winner);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimulateLocalByPlayer)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_BlatantlyFalse(benchmark::State& state) {
  Random rng(4);
  const std::size_t n = 32;
  const Formula f =
      CnfToFormula(RandomCnf(n, static_cast<std::size_t>(state.range(0)), 3, rng));
  // Nothing assigned, so no clause is decided and every node is visited.
  const Assignment a(n);
  for (auto _ : state) benchmark::DoNotOptimize(BlatantlyFalse(f, a));
  state.SetComplexityN(static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_BlatantlyFalse)->RangeMultiplier(4)->Range(4, 1024)->Complexity(benchmark::oN);

void BM_SnortDualSolve(benchmark::State& state) {
  Random rng(5);
  const Graph g = RandomGraph(static_cast<std::size_t>(state.range(0)), 0.4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(CheckSnort(g).agree());
}
BENCHMARK(BM_SnortDualSolve)->DenseRange(4, 8, 2);

}  // namespace
}  // namespace qbfgames

BENCHMARK_MAIN();
