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

#ifndef MTPLS_HARNESS_RUNNER_H_
#define MTPLS_HARNESS_RUNNER_H_

#include <string>
#include <vector>

#include "mtpls/counters.h"
#include "mtpls/harness/complexity.h"
#include "mtpls/harness/grid.h"

namespace mtpls::harness {

struct RunOptions {
  double alpha = 0.1;
  ComplexityWeights weights;
  int threads = 0;  // 0: hardware concurrency
};

// One CSV row.
struct RunRow {
  double eps = 0.0;
  double tau = 0.0;
  RocketScenario scenario;
  std::string algo;
  std::string da;
  std::string status;  // converged, trivial, failed, capped, horizon, error
  int fail_code = 0;
  double t_star = 0.0;
  RunCounters counters;
  double cx_a = 0.0;
  double cx_b = 0.0;
  double cx_c = 0.0;

  std::string variant() const;
  bool succeeded() const {
    return status == "converged" || status == "trivial";
  }
};

MtplsConfig SampleConfig(const Variant& v, double eps, double tau,
                         const RunOptions& opts);

// Runs one variant on one scenario. Exceptions become "error" rows.
RunRow RunSample(const RocketScenario& sc, double eps, double tau,
                 const Variant& v, const RunOptions& opts);

// All rows in grid order: eps, tau, scenario, variant. The semi-analytic
// variants never integrate, so they run once per (eps, scenario) and their
// row is repeated for each tau.
std::vector<RunRow> RunGrid(const GridSpec& grid,
                            const std::vector<Variant>& variants,
                            const RunOptions& opts);

}  // namespace mtpls::harness

#endif  // MTPLS_HARNESS_RUNNER_H_
