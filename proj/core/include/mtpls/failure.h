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

#ifndef MTPLS_FAILURE_H_
#define MTPLS_FAILURE_H_

#include <optional>

#include "mtpls/types.h"

namespace mtpls {

// Runtime failure conditions. The numeric values are the reported codes.
enum class FailureKind {
  kNegativeDelta = 1,
  kNegativeLower = 2,
  kTimeDecreasing = 3,
  kBoostCap = 4,
  kDistanceNotDecreasing = 5,
  kZeroDistance = 6,
  kStepUnderflow = 7,
};

inline int FailureCode(FailureKind k) { return static_cast<int>(k); }
const char* FailureName(FailureKind k);

// Step sizes below this count as gamma <= 0.
inline constexpr double kGammaFloor = 1e-300;
// Distance iterates shorter than this count as |s| = 0.
inline constexpr double kZeroNorm = 1e-14;
// delta = upper - lower is counted negative only below -kDeltaRoundoff * upper;
// smaller negatives are cancellation error when p is aligned with the chord.
inline constexpr double kDeltaRoundoff = 16 * 2.220446049250313e-16;

// Watches per-iteration telemetry of a minimum-time solver and latches the
// first condition that triggers.
class FailureMonitor {
 public:
  explicit FailureMonitor(long boost_call_cap = 10000)
      : boost_call_cap_(boost_call_cap) {}

  // Condition 2 is only checked when `lower_armed` is set.
  std::optional<FailureKind> OnEstimates(double lower, double upper,
                                         bool lower_armed);
  std::optional<FailureKind> OnTime(Time t);
  std::optional<FailureKind> OnBoostCall();
  // Distance iterates |s| of one distance run; call ResetDistance() between
  // runs.
  std::optional<FailureKind> OnDistanceNorm(double norm);
  void ResetDistance() { last_norm_.reset(); }
  std::optional<FailureKind> OnStepSize(double gamma);
  // Records a condition detected elsewhere (for example inside a solver).
  std::optional<FailureKind> Report(FailureKind k);

  std::optional<FailureKind> first() const { return first_; }
  long boost_calls() const { return boost_calls_; }

 private:
  std::optional<FailureKind> Latch(FailureKind k);

  long boost_call_cap_;
  long boost_calls_ = 0;
  std::optional<Time> last_time_;
  std::optional<double> last_norm_;
  std::optional<FailureKind> first_;
};

}  // namespace mtpls

#endif  // MTPLS_FAILURE_H_
