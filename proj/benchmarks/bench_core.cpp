// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>

#include "cbc/selectors.hpp"

namespace {

using namespace cbc;

const HardInstance& bench_instance() {
  static const HardInstance inst = [] {
    InstanceParams params;
    params.alpha = std::acos(1.0 - params.eps);
    params.n_caps = 2000;
    return build_instance(params);
  }();
  return inst;
}

void BM_SupportByCutCount(benchmark::State& state) {
  const int n_cuts = static_cast<int>(state.range(0));
  const CapCutBall body = bench_instance().body(n_cuts + 1);
  auto engine = make_stream(1, stream::kCorpus);
  const UnitVector y = sample_direction(8, engine);
  for (auto _ : state) {
    benchmark::DoNotOptimize(body.support(y));
  }
  state.SetComplexityN(n_cuts);
}
BENCHMARK(BM_SupportByCutCount)->RangeMultiplier(4)->Range(1, 1024)->Complexity(benchmark::oN);

void BM_CapArea(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cap_area(0.3, 8, grid));
  }
}
BENCHMARK(BM_CapArea)->Arg(512)->Arg(4096);

void BM_DpBallMinusCap(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp_ball_minus_cap(0.3, 8, 2.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_DpBallMinusCap)->Arg(512)->Arg(4096);

void BM_DistP(benchmark::State& state) {
  QuadratureSpec quad;
  quad.mc_samples = static_cast<int>(state.range(0));
  const Ball a(axis_point(8, 0, 0.1), 0.5);
  const CapCutBall b = bench_instance().body(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_p(a, b, 2.0, quad).value);
  }
  state.SetItemsProcessed(state.iterations() * quad.mc_samples);
}
BENCHMARK(BM_DistP)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Steiner(benchmark::State& state) {
  QuadratureSpec quad;
  quad.mc_samples = static_cast<int>(state.range(0));
  const Ball a(axis_point(8, 0, 0.1), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(steiner(a, quad).point);
  }
  state.SetItemsProcessed(state.iterations() * quad.mc_samples);
}
BENCHMARK(BM_Steiner)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SteinerTrajectory(benchmark::State& state) {
  QuadratureSpec quad;
  quad.mc_samples = 5000;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(steiner_trajectory(bench_instance(), n, quad).size());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SteinerTrajectory)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oN);

void BM_PackCaps(benchmark::State& state) {
  InstanceParams params;
  params.alpha = std::acos(1.0 - params.eps);
  params.n_caps = static_cast<int>(state.range(0));
  std::vector<double> thetas;
  for (int i = 1; i <= params.n_caps; ++i) {
    thetas.push_back(theta_schedule(i, params.alpha, params.d, params.p));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pack_caps(params, thetas).size());
  }
  state.SetComplexityN(params.n_caps);
}
BENCHMARK(BM_PackCaps)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
