// Copyright 2026 The largesieve Authors
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

#include "largesieve/largesieve.hpp"

namespace {

namespace ls = largesieve;

ls::CoefficientVector signs(std::size_t n) {
  return ls::make_ensemble({ls::EnsembleKind::kRademacher, n, 1, {}});
}

// Sieve sum over all Farey points of order Q with N = 4 Q.
void BM_FareyEvaluator(benchmark::State& state) {
  const auto q = state.range(0);
  const auto v = signs(static_cast<std::size_t>(4 * q));
  const ls::FareyEvaluator evaluator(q);
  for (auto _ : state) benchmark::DoNotOptimize(evaluator.sieve_sum(v));
  state.SetComplexityN(q);
}
BENCHMARK(BM_FareyEvaluator)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_DirectAtFareyPoints(benchmark::State& state) {
  const auto q = state.range(0);
  const auto v = signs(static_cast<std::size_t>(4 * q));
  const auto fractions = ls::farey_fractions(q);
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& f : fractions) acc += std::norm(ls::eval_direct(v, f.value()));
    benchmark::DoNotOptimize(acc);
  }
  state.SetComplexityN(q);
}
BENCHMARK(BM_DirectAtFareyPoints)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_Spectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto v = signs(n);
  const std::size_t grid = ls::default_grid_size(n);
  for (auto _ : state) benchmark::DoNotOptimize(ls::spectrum(v, grid));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(4)->Range(64, 16384);

void BM_MBounds(benchmark::State& state) {
  const auto sg = ls::spectrum(signs(1024), 8192);
  for (auto _ : state) benchmark::DoNotOptimize(ls::m_functional_bounds(sg, 1.0 / 16));
}
BENCHMARK(BM_MBounds);

void BM_UncoveredSet(benchmark::State& state) {
  const auto q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ls::uncovered_set(q, ls::Rational(4)));
}
BENCHMARK(BM_UncoveredSet)->RangeMultiplier(4)->Range(16, 1024);

void BM_BluesteinDft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ls::Dft plan(n);
  const std::vector<ls::Complex> in(n, ls::Complex(1.0, 0.5));
  std::vector<ls::Complex> out(n);
  for (auto _ : state) {
    plan.forward(in, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_BluesteinDft)->Arg(97)->Arg(1009)->Arg(10007);

}  // namespace

BENCHMARK_MAIN();
