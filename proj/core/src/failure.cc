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

#include "mtpls/failure.h"

namespace mtpls {

const char* FailureName(FailureKind k) {
  switch (k) {
    case FailureKind::kNegativeDelta:
      return "negative delta";
    case FailureKind::kNegativeLower:
      return "negative lower estimate";
    case FailureKind::kTimeDecreasing:
      return "time decreasing";
    case FailureKind::kBoostCap:
      return "boost call cap";
    case FailureKind::kDistanceNotDecreasing:
      return "distance not decreasing";
    case FailureKind::kZeroDistance:
      return "zero distance";
    case FailureKind::kStepUnderflow:
      return "step size underflow";
  }
  return "unknown";
}

std::optional<FailureKind> FailureMonitor::Latch(FailureKind k) {
  if (!first_) first_ = k;
  return k;
}

std::optional<FailureKind> FailureMonitor::Report(FailureKind k) {
  return Latch(k);
}

std::optional<FailureKind> FailureMonitor::OnEstimates(double lower,
                                                       double upper,
                                                       bool lower_armed) {
  if (upper - lower < -kDeltaRoundoff * upper) return Latch(FailureKind::kNegativeDelta);
  if (lower_armed && lower < 0.0) return Latch(FailureKind::kNegativeLower);
  return std::nullopt;
}

std::optional<FailureKind> FailureMonitor::OnTime(Time t) {
  const bool decreasing = last_time_ && t < *last_time_;
  last_time_ = t;
  if (decreasing) return Latch(FailureKind::kTimeDecreasing);
  return std::nullopt;
}

std::optional<FailureKind> FailureMonitor::OnBoostCall() {
  if (++boost_calls_ > boost_call_cap_) return Latch(FailureKind::kBoostCap);
  return std::nullopt;
}

std::optional<FailureKind> FailureMonitor::OnDistanceNorm(double norm) {
  if (norm < kZeroNorm) return Latch(FailureKind::kZeroDistance);
  const bool stalled = last_norm_ && norm >= *last_norm_;
  last_norm_ = norm;
  if (stalled) return Latch(FailureKind::kDistanceNotDecreasing);
  return std::nullopt;
}

std::optional<FailureKind> FailureMonitor::OnStepSize(double gamma) {
  if (!(gamma >= kGammaFloor)) return Latch(FailureKind::kStepUnderflow);
  return std::nullopt;
}

}  // namespace mtpls
