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

#include "mtpls/harness/runner.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

namespace mtpls::harness {

std::string RunRow::variant() const {
  return da == "none" ? algo : algo + "+" + da;
}

MtplsConfig SampleConfig(const Variant& v, double eps, double tau,
                         const RunOptions& opts) {
  MtplsConfig cfg;
  cfg.epsilon = eps;
  cfg.alpha = opts.alpha;
  if (v.da) cfg.da = *v.da;
  cfg.integrator.tau = tau;
  return cfg;
}

RunRow RunSample(const RocketScenario& sc, double eps, double tau,
                 const Variant& v, const RunOptions& opts) {
  RunRow row;
  row.eps = eps;
  row.tau = tau;
  row.scenario = sc;
  row.algo = v.algo_name();
  row.da = v.da_name();
  try {
    sc.Validate();
    const RocketPlant plant(sc.v0);
    const MovingPointBody target = RocketTarget(sc);
    const MinTimeProblem problem{plant, target, ContactEngine::kAnalytic};
    Covec p0;
    try {
      p0 = InitialSupport(sc);
    } catch (const std::invalid_argument&) {
      row.status = "trivial";
      return row;
    }
    const MtplsOutcome out =
        SolveMinTime(v.algo, problem, SampleConfig(v, eps, tau, opts), p0);
    row.status = MtplsStatusName(out.status);
    row.fail_code = out.failure ? FailureCode(*out.failure) : 0;
    row.t_star = out.t_star;
    row.counters = out.counters;
  } catch (const std::exception&) {
    row.status = "error";
    row.fail_code = 0;
    row.t_star = std::numeric_limits<double>::quiet_NaN();
  }
  row.cx_a = ComplexityTypeA(row.counters);
  row.cx_b = ComplexityTypeB(row.counters, opts.weights, tau);
  row.cx_c = ComplexityTypeC(row.counters);
  return row;
}

namespace {

struct Job {
  int eps;
  int tau;  // index into taus; 0 for semi-analytic variants
  int scenario;
  int variant;
};

}  // namespace

std::vector<RunRow> RunGrid(const GridSpec& grid,
                            const std::vector<Variant>& variants,
                            const RunOptions& opts) {
  grid.Validate();
  const std::vector<double> epsilons = grid.Epsilons();
  const std::vector<RocketScenario> scenarios = grid.Scenarios();
  const std::vector<double>& taus = grid.taus;

  std::vector<Job> jobs;
  std::map<std::tuple<int, int, int, int>, size_t> slot;
  for (int e = 0; e < static_cast<int>(epsilons.size()); ++e) {
    for (int s = 0; s < static_cast<int>(scenarios.size()); ++s) {
      for (int v = 0; v < static_cast<int>(variants.size()); ++v) {
        const int tau_count =
            variants[v].uses_boost() ? static_cast<int>(taus.size()) : 1;
        for (int t = 0; t < tau_count && !taus.empty(); ++t) {
          slot[{e, t, s, v}] = jobs.size();
          jobs.push_back({e, t, s, v});
        }
      }
    }
  }

  std::vector<RunRow> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      const Job& j = jobs[i];
      results[i] = RunSample(scenarios[j.scenario], epsilons[j.eps],
                             taus[j.tau], variants[j.variant], opts);
    }
  };
  int threads = opts.threads > 0
                    ? opts.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<RunRow> rows;
  rows.reserve(epsilons.size() * taus.size() * scenarios.size() *
               variants.size());
  for (int e = 0; e < static_cast<int>(epsilons.size()); ++e) {
    for (int t = 0; t < static_cast<int>(taus.size()); ++t) {
      for (int s = 0; s < static_cast<int>(scenarios.size()); ++s) {
        for (int v = 0; v < static_cast<int>(variants.size()); ++v) {
          const bool boost = variants[v].uses_boost();
          RunRow row = results[slot.at({e, boost ? t : 0, s, v})];
          if (!boost) row.tau = taus[t];
          row.cx_b = ComplexityTypeB(row.counters, opts.weights, row.tau);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

}  // namespace mtpls::harness
