// Copyright 2026 The mtpls Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     https://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "mtpls/distance_algorithms.h"
#include "mtpls/isotropic_rocket.h"
#include "mtpls/linear_dynamics.h"
#include "mtpls/min_time.h"
#include "mtpls/simplex_distance.h"

namespace mtpls {
namespace {

Covec RandomCovec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Covec p(n);
  for (int i = 0; i < n; ++i) p(i) = g(rng);
  return p;
}

RocketScenario Scenario() { return {0.25, 2.0, 1.0, 0.1, -0.2}; }

void BM_RocketAnalyticContact(benchmark::State& state) {
  const RocketPlant plant(0.25);
  std::mt19937_64 rng(1);
  const Covec p = RandomCovec(rng, 4);
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plant.AnalyticContact(t, p));
    t = t < 10.0 ? t + 1e-3 : 1.0;
  }
}
BENCHMARK(BM_RocketAnalyticContact);

void BM_Rk4Contact(benchmark::State& state) {
  const RocketPlant plant(0.25);
  std::mt19937_64 rng(2);
  const Covec p = RandomCovec(rng, 4);
  const IntegratorConfig cfg{std::pow(10.0, -state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Rk4Contact(plant, cfg, 3.0, p));
  }
}
BENCHMARK(BM_Rk4Contact)->DenseRange(2, 4);

void BM_NearestInHull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  VertexSet v(n);
  while (v.size() < n + 1) {
    StateVec s(n);
    for (int i = 0; i < n; ++i) s(i) = g(rng) + (i == 0 ? 5.0 : 0.0);
    v.Insert(s);
  }
  for (auto _ : state) benchmark::DoNotOptimize(NearestInHull(v));
}
BENCHMARK(BM_NearestInHull)->Arg(2)->Arg(4)->Arg(8);

void BM_Rk4Boost(benchmark::State& state) {
  const RocketScenario sc = Scenario();
  const RocketPlant plant(sc.v0);
  const MovingPointBody target = RocketTarget(sc);
  const IntegratorConfig cfg{1e-3};
  const Covec p = InitialSupport(sc);
  const StateVec s = plant.AnalyticContact(0.5, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Rk4Boost(plant, target, cfg, 0.5, p, s));
  }
}
BENCHMARK(BM_Rk4Boost);

void BM_Solve(benchmark::State& state) {
  const auto algo = static_cast<MinTimeAlgorithm>(state.range(0));
  const RocketScenario sc = Scenario();
  const RocketPlant plant(sc.v0);
  const MovingPointBody target = RocketTarget(sc);
  MtplsConfig cfg;
  cfg.epsilon = std::pow(3.0, -7);
  cfg.alpha = 0.1;
  cfg.integrator.tau = 1e-3;
  cfg.da = DistanceAlgorithm::kSteepestAscent;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SolveMinTime(algo, {plant, target}, cfg, InitialSupport(sc)));
  }
}
BENCHMARK(BM_Solve)
    ->Arg(static_cast<int>(MinTimeAlgorithm::kNeustadtEaton))
    ->Arg(static_cast<int>(MinTimeAlgorithm::kBarrGilbert))
    ->Arg(static_cast<int>(MinTimeAlgorithm::kSemiAnalytic));

}  // namespace
}  // namespace mtpls

BENCHMARK_MAIN();
