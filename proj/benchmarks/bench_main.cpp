// Copyright 2026 The dlash Authors
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

#include "dlash/dyer_lashof/adem.hpp"
#include "dlash/dyer_lashof/total_power.hpp"
#include "dlash/laurent/series.hpp"
#include "dlash/steenrod/dual.hpp"

namespace {

using namespace dlash;

void BM_ReduceWord(benchmark::State& state) {
  const int top = static_cast<int>(state.range(0));
  for (auto _ : state) {
    dl::AdmissibleReducer reducer;  // cold memo each round
    benchmark::DoNotOptimize(reducer.reduce_word({top, top / 2 + 1, top / 5 + 1, 1}, 1));
  }
}
BENCHMARK(BM_ReduceWord)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesInverse(benchmark::State& state) {
  const auto cap = state.range(0);
  laurent::LaurentSeries a = steenrod::zeta_series(cap).shifted(0, -1);
  for (auto _ : state) benchmark::DoNotOptimize(laurent::series_inverse(a, cap));
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(32)->Arg(64);

void BM_Identity1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(steenrod::verify_bisson_joyal_identity1(state.range(0)));
}
BENCHMARK(BM_Identity1)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_QOp(benchmark::State& state) {
  const f2::F2Poly a = steenrod::zeta(1) * steenrod::zeta(2) + steenrod::zeta(1).pow(4);
  for (auto _ : state) benchmark::DoNotOptimize(steenrod::q_op(static_cast<int>(state.range(0)), a, 32));
}
BENCHMARK(BM_QOp)->Arg(6)->Arg(12)->Arg(24);

void BM_SymmetryDerive(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dl::derive_adem_from_symmetry({"x", 1}, bound));
}
BENCHMARK(BM_SymmetryDerive)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
