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

#ifndef MTPLS_MIN_TIME_H_
#define MTPLS_MIN_TIME_H_

#include <optional>
#include <string_view>
#include <vector>

#include "mtpls/counters.h"
#include "mtpls/distance_algorithms.h"
#include "mtpls/failure.h"
#include "mtpls/geometry.h"
#include "mtpls/linear_dynamics.h"

namespace mtpls {

struct MinTimeProblem {
  const LinearPlant& plant;
  const MovingBody& target;
  ContactEngine engine = ContactEngine::kAnalytic;
};

struct MtplsConfig {
  double epsilon = 1e-3;  // stop once rho_upper <= epsilon
  double alpha = 0.1;     // distance-algorithm tolerance
  DistanceAlgorithm da = DistanceAlgorithm::kSteepestAscent;
  IntegratorConfig integrator;
  long f_call_cap = 10000;
  long max_iters = 100000;     // outer iterations
  long da_max_iters = 100000;  // per distance-algorithm call
  // Semi-analytic horizon: horizon_factor * rho_upper(0) / (vR - vG), or
  // horizon_cap when vR <= vG.
  double horizon_factor = 10.0;
  Time horizon_cap = 1e3;
  // Replaces the Eaton step rule by rho_lower(p + g q) > g * rho_upper(p)^2.
  bool boltyanskii_step = false;
  bool record_trace = false;

  void Validate() const;
};

enum class MtplsStatus {
  kConverged,
  kTrivialHitAtZero,
  kFailed,
  kIterationCap,
  kHorizonExceeded,
};

std::string_view MtplsStatusName(MtplsStatus s);

struct TraceEntry {
  Time t = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  RunCounters work;  // spent since the previous entry
};

struct MtplsOutcome {
  Time t_star = 0.0;
  Covec p_star;  // unit
  MtplsStatus status = MtplsStatus::kConverged;
  std::optional<FailureKind> failure;
  RunCounters counters;
  long iterations = 0;
  std::vector<TraceEntry> trace;  // filled when record_trace is set

  bool ok() const {
    return status == MtplsStatus::kConverged ||
           status == MtplsStatus::kTrivialHitAtZero;
  }
};

MtplsOutcome NeustadtEaton(const MinTimeProblem& problem,
                           const MtplsConfig& cfg, const Covec& p0);
MtplsOutcome BarrGilbert(const MinTimeProblem& problem,
                         const MtplsConfig& cfg, const Covec& p0);
MtplsOutcome SemiAnalytic(const MinTimeProblem& problem,
                          const MtplsConfig& cfg, const Covec& p0);

enum class MinTimeAlgorithm { kNeustadtEaton, kBarrGilbert, kSemiAnalytic };

MtplsOutcome SolveMinTime(MinTimeAlgorithm algo, const MinTimeProblem& problem,
                          const MtplsConfig& cfg, const Covec& p0);

// Distance estimates at (t, p) without touching any counters.
EstimatePair EstimatesAt(const MinTimeProblem& problem, Time t,
                         const Covec& p, const IntegratorConfig& cfg = {});

struct ReferenceOptions {
  double tol = 1e-9;   // bracket width goal of each bisection
  double eta = 1e-9;   // distances up to eta count as touching
  double hit_tol = 1e-12;  // distances up to hit_tol count as a hit
  Time horizon = 1e3;  // give up when no hit is found before this time
  long gjk_max_iters = 10000;
};

// Bounds on the minimum time. GJK certifies rho(lower) > eta and
// rho(upper) <= hit_tol. The width exceeds tol when the distance approaches
// zero slowly.
struct ReferenceBracket {
  Time lower = 0.0;
  Time upper = 0.0;

  Time mid() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

// Throws std::runtime_error("target unreachable on horizon").
ReferenceBracket ReferenceTStar(const MinTimeProblem& problem,
                                const ReferenceOptions& opts = {});

}  // namespace mtpls

#endif  // MTPLS_MIN_TIME_H_
