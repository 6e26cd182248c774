// Copyright 2026 The dpsum Authors. All rights reserved.
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

#include <cmath>

#include "dpsum/audit.hpp"
#include "dpsum/hyper.hpp"
#include "dpsum/registry.hpp"
#include "dpsum/series.hpp"
#include "dpsum/specfun.hpp"

namespace {

void BM_Digamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpsum::digamma(x));
    x += 0.013;
    if (x > 40.0) x = 0.37;
  }
}
BENCHMARK(BM_Digamma);

void BM_DigammaReflected(benchmark::State& state) {
  int k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpsum::digamma(-0.37 - k));
    k = (k + 1) % 30;
  }
}
BENCHMARK(BM_DigammaReflected);

void BM_Polygamma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpsum::polygamma(n, x));
    x += 0.013;
    if (x > 40.0) x = 0.37;
  }
}
BENCHMARK(BM_Polygamma)->Arg(1)->Arg(3)->Arg(8);

void BM_SumInfiniteLog(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  const dpsum::SeriesSpec spec = dpsum::SeriesSpec::Infinite(
      [](std::int64_t l) {
        const double x = static_cast<double>(l) + 1.0;
        return dpsum::digamma(x) / (x * x);
      },
      0, dpsum::TailClass::PowerLog(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpsum::sum_infinite(spec, tol).value);
  }
}
BENCHMARK(BM_SumInfiniteLog)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_CollapsedTripleSum(benchmark::State& state) {
  const dpsum::SeriesSpec spec = dpsum::collapse_multisum(
      {dpsum::RationalTerm{1.0, {{0.5, 1}}}, dpsum::RationalTerm{1.0, {{1.0, 1}}},
       dpsum::RationalTerm{0.5, {{2.5, 1}, {3.0, 1}}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpsum::sum_infinite(spec).value);
  }
}
BENCHMARK(BM_CollapsedTripleSum)->Unit(benchmark::kMicrosecond);

void BM_F43Bruteforce(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dpsum::pfq_unit_bruteforce({{1, 1, 1, 1}, {2, 2, 0.5}}).value);
  }
}
BENCHMARK(BM_F43Bruteforce)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
  const char* ids[] = {"EQ_030", "EQ_068", "APB_05"};
  const char* id = ids[state.range(0)];
  state.SetLabel(id);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpsum::verify(id, dpsum::ParamPoint()).verdict);
  }
}
BENCHMARK(BM_Verify)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_Audit(benchmark::State& state) {
  dpsum::AuditConfig config;
  config.timestamp = "2026-01-01T00:00:00Z";
  config.parallelism = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dpsum::run_audit(config).summary.total);
  }
}
BENCHMARK(BM_Audit)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
