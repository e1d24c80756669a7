// Copyright 2026 The qdl Authors
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

#include <vector>

#include "qdl/correlators.hpp"
#include "qdl/dynamics.hpp"
#include "qdl/oracle.hpp"
#include "qdl/spectrum.hpp"
#include "qdl/squeezing.hpp"
#include "qdl/sweep.hpp"

namespace {

void BM_Transient(benchmark::State& state) {
  const qdl::SystemParams p{2.0, 1.0, 0.5};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdl::transient(p, qdl::BlochVector::ground(), t));
    t += 1e-3;
  }
}
BENCHMARK(BM_Transient);

void BM_OracleEvolve(benchmark::State& state) {
  const qdl::SystemParams p{2.0, 1.0, 0.5};
  const auto cfg = qdl::oracle::IntegratorConfig::resolving(p, 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(qdl::oracle::evolve(p, {0.0, 1.0, 0.0}, cfg));
}
BENCHMARK(BM_OracleEvolve)->Unit(benchmark::kMillisecond);

void BM_G2Curve(benchmark::State& state) {
  std::vector<double> taus(static_cast<std::size_t>(state.range(0)));
  for (std::size_t k = 0; k < taus.size(); ++k) taus[k] = 20.0 * k / taus.size();
  for (auto _ : state) benchmark::DoNotOptimize(qdl::g2({5.0, 1.0, 0.25}, taus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_G2Curve)->Arg(301)->Arg(10000);

void BM_SpectrumEval(benchmark::State& state) {
  const auto d = qdl::decompose({10.0, 1.0, 0.5});
  double w = -30.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.evaluate(w));
    w = w > 30.0 ? -30.0 : w + 0.01;
  }
}
BENCHMARK(BM_SpectrumEval);

void BM_Peaks(benchmark::State& state) {
  const auto d = qdl::decompose({10.0, 1.0, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(qdl::peaks(d, {-30.0, 30.0}));
}
BENCHMARK(BM_Peaks)->Unit(benchmark::kMicrosecond);

void BM_SqueezingScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qdl::squeezing_scan(0.02, 0.0, 2.0, 1e-3));
}
BENCHMARK(BM_SqueezingScan)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  qdl::SweepConfig cfg;
  cfg.observable = qdl::Observable::kCentralPeakFwhm;
  cfg.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qdl::run_sweep(cfg));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
