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

#ifndef MTPLS_DISTANCE_ALGORITHMS_H_
#define MTPLS_DISTANCE_ALGORITHMS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "mtpls/estimates.h"
#include "mtpls/failure.h"
#include "mtpls/types.h"

namespace mtpls {

struct MdpConfig {
  double epsilon = 1e-8;  // absolute tolerance of GJK
  double alpha = 1e-6;    // relative tolerance delta <= alpha * lower
  double gamma0 = 0.5;    // initial step size of the ascent methods
  long max_iters = 100000;

  void Validate() const;
};

enum class MdpStatus { kConverged, kFailed, kIterationCap };

struct MdpOutcome {
  Covec support;  // unit
  EstimatePair estimates;
  long iterations = 0;
  long contact_calls = 0;
  MdpStatus status = MdpStatus::kConverged;
  std::optional<FailureKind> failure;
  // rho_lower at the start and after every outer iteration.
  std::vector<double> lower_trace;
  // Full evaluation at `support`.
  SupportEval eval;

  bool ok() const { return status == MdpStatus::kConverged; }
};

struct GjkResult {
  StateVec s;  // point of R - G nearest to the origin, up to epsilon
  double lower = 0.0;  // rho_lower(-s^T) from the last check, if evaluated
  long iterations = 0;
  long contact_calls = 0;
  MdpStatus status = MdpStatus::kConverged;
  std::optional<FailureKind> failure;
  bool encloses_origin = false;
  // Set when the loop stopped on the gap test; `last_eval` is then the
  // evaluation at -s^T.
  bool gap_certified = false;
  SupportEval last_eval;
};

GjkResult GjkDistance(const ProblemAtTime& pt, const MdpConfig& cfg,
                      const Covec& p0);

MdpOutcome GjkStar(const ProblemAtTime& pt, const MdpConfig& cfg,
                   const Covec& p0);
MdpOutcome GilbertDistance(const ProblemAtTime& pt, const MdpConfig& cfg,
                           const Covec& p0);
// Throws std::invalid_argument when rho_lower(p0) < 0.
MdpOutcome SteepestAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0);
MdpOutcome GradientAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0);

// Variants that thread the step size through successive calls.
MdpOutcome SteepestAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0, double& gamma);
MdpOutcome GradientAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0, double& gamma);

enum class DistanceAlgorithm { kGjkStar, kGilbert, kSteepestAscent,
                               kGradientAscent };

std::string_view DistanceAlgorithmName(DistanceAlgorithm kind);
// Accepts "gjk", "g", "sa", "ga".
std::optional<DistanceAlgorithm> ParseDistanceAlgorithm(std::string_view s);

// Runs `kind` from an already computed evaluation at a unit support vector.
// `gamma` is used only by the ascent methods.
MdpOutcome RunDistanceAlgorithm(DistanceAlgorithm kind,
                                const ProblemAtTime& pt, const MdpConfig& cfg,
                                const SupportEval& start, double& gamma);

}  // namespace mtpls

#endif  // MTPLS_DISTANCE_ALGORITHMS_H_
