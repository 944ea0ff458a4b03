// Copyright 2026 The dttg Authors.
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

#include <fstream>
#include <random>
#include <sstream>

#include "dttg/arena.h"
#include "dttg/cwf.h"
#include "dttg/depgame.h"
#include "dttg/dtt.h"
#include "dttg/fixtures.h"
#include "dttg/interp.h"
#include "dttg/strategy.h"

namespace dttg {
namespace {

void BM_CopycatBang(benchmark::State& state) {
  Game g = Bang(Arrow(Boolean(), Boolean(), 1), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Copycat(g));
}
BENCHMARK(BM_CopycatBang)->Arg(1)->Arg(2)->Arg(3);

void BM_ComposeCopycats(benchmark::State& state) {
  Game a = Arrow(Boolean(), Boolean(), 2);
  Strategy cc = Copycat(a);
  for (auto _ : state) benchmark::DoNotOptimize(Compose(cc, cc));
}
BENCHMARK(BM_ComposeCopycats);

void BM_SampleWinning(benchmark::State& state) {
  Game g = Arrow(Arrow(Boolean(), Boolean(), 1), Boolean(), static_cast<int>(state.range(0)));
  std::mt19937_64 rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(SampleWinning(g, rng));
}
BENCHMARK(BM_SampleWinning)->Arg(1)->Arg(2);

void BM_FigureColumn(benchmark::State& state) {
  Game g = calendar::DaysEndoFunctions(2);
  for (auto _ : state) benchmark::DoNotOptimize(IsWinning(g, calendar::Column(4, 2)));
}
BENCHMARK(BM_FigureColumn)->Unit(benchmark::kMillisecond);

void BM_NormalizeBoolFunctions(benchmark::State& state) {
  dtt::Signature sig;
  dtt::ExprPtr type = dtt::ParseExpr("Bool → Bool → Bool");
  dtt::ExprPtr term = dtt::Check(
      sig, {}, dtt::ParseExpr("λ(x : Bool). λ(y : Bool). (if x then (if y then ff else tt) else y : Bool)"), type);
  for (auto _ : state) benchmark::DoNotOptimize(dtt::Normalize(sig, {}, term, type));
}
BENCHMARK(BM_NormalizeBoolFunctions);

void BM_InterpretXor(benchmark::State& state) {
  dtt::Signature sig;
  dtt::ExprPtr type = dtt::ParseExpr("Bool → Bool → Bool");
  dtt::ExprPtr term =
      dtt::ParseExpr("λ(x : Bool). λ(y : Bool). (if x then (if y then ff else tt) else y : Bool)");
  for (auto _ : state) {
    Interpreter in(sig, Cwf(2));
    benchmark::DoNotOptimize(in.Interpret({}, term, type));
  }
}
BENCHMARK(BM_InterpretXor)->Unit(benchmark::kMillisecond);

void BM_CalendarConstructors(benchmark::State& state) {
  std::ifstream f(std::string(DTTG_FIXTURES_DIR) + "/calendar.dtt");
  std::stringstream ss;
  ss << f.rdbuf();
  dtt::Signature sig;
  sig.Load(ss.str());
  for (auto _ : state) {
    Interpreter in(sig, Cwf(2));
    const FiniteFamily& fam = in.Family("Days");
    benchmark::DoNotOptimize(in.cwf().Constructor(ContextGame(), fam, fam.points[1].constructors[59]));
  }
}
BENCHMARK(BM_CalendarConstructors)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
}  // namespace dttg

BENCHMARK_MAIN();
