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

#include "mtpls/distance_algorithms.h"

#include <algorithm>
#include <stdexcept>

#include "mtpls/simplex_distance.h"

namespace mtpls {

void MdpConfig::Validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (!(gamma0 > 0.0 && gamma0 < 1.0)) {
    throw std::invalid_argument("gamma0 must lie in (0, 1)");
  }
  if (max_iters <= 0) throw std::invalid_argument("max_iters must be > 0");
}

namespace {

// Evaluation at a unit covector, rescaled from an evaluation at a multiple
// of it. Contacts are invariant under positive scaling.
SupportEval Rescaled(SupportEval e) {
  e.p /= e.p.norm();
  return e;
}

bool Certified(const SupportEval& e, double alpha) {
  return e.delta() <= alpha * e.lower;
}

void Finish(MdpOutcome& out, const SupportEval& e) {
  out.support = e.p;
  out.estimates = e.estimates();
  out.eval = e;
}

void Fail(MdpOutcome& out, FailureKind k) {
  out.status = MdpStatus::kFailed;
  out.failure = k;
}

MdpOutcome RunGjkStar(const ProblemAtTime& pt, const MdpConfig& cfg,
                      const SupportEval& start) {
  MdpOutcome out;
  SupportEval e = start;
  out.lower_trace.push_back(e.lower);
  FailureMonitor monitor;
  VertexSet v(pt.reach.dim());
  v.Insert(-e.chord());
  while (!Certified(e, cfg.alpha)) {
    if (out.iterations >= cfg.max_iters) {
      out.status = MdpStatus::kIterationCap;
      break;
    }
    HullPoint h = NearestInHull(v);
    const double norm = h.s.norm();
    if (auto f = monitor.OnDistanceNorm(norm)) {
      Fail(out, *f);
      break;
    }
    v = std::move(h.kept);
    e = Evaluate(pt, Transposed(StateVec(-h.s / norm)));
    ++out.contact_calls;
    ++out.iterations;
    out.lower_trace.push_back(e.lower);
    v.Insert(-e.chord());
  }
  Finish(out, e);
  return out;
}

MdpOutcome RunGilbert(const ProblemAtTime& pt, const MdpConfig& cfg,
                      const SupportEval& start) {
  MdpOutcome out;
  SupportEval e = start;
  out.lower_trace.push_back(e.lower);
  FailureMonitor monitor;
  StateVec s = -e.chord();
  monitor.OnDistanceNorm(s.norm());
  while (!Certified(e, cfg.alpha)) {
    if (out.iterations >= cfg.max_iters) {
      out.status = MdpStatus::kIterationCap;
      break;
    }
    const double norm = s.norm();
    if (norm < kZeroNorm) {
      Fail(out, FailureKind::kZeroDistance);
      break;
    }
    e = Evaluate(pt, Transposed(StateVec(-s / norm)));
    ++out.contact_calls;
    ++out.iterations;
    out.lower_trace.push_back(e.lower);
    const StateVec step = s + e.chord();  // s - (s_R(p) - s_G(-p))
    const double step_sq = step.squaredNorm();
    if (step_sq > 0.0) {
      s -= step * std::min(1.0, s.dot(step) / step_sq);
    }
    if (Certified(e, cfg.alpha)) break;
    if (auto f = monitor.OnDistanceNorm(s.norm())) {
      Fail(out, *f);
      break;
    }
  }
  Finish(out, e);
  return out;
}

MdpOutcome RunSteepestAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                             const SupportEval& start, double& gamma) {
  MdpOutcome out;
  SupportEval e = start;
  out.lower_trace.push_back(e.lower);
  while (!Certified(e, cfg.alpha)) {
    if (out.iterations >= cfg.max_iters) {
      out.status = MdpStatus::kIterationCap;
      break;
    }
    const Covec q = AscentDirection(e);
    SupportEval inclined;
    bool underflow = false;
    while (true) {
      ++out.contact_calls;
      if (XiPrime(pt, e.p, q, gamma, &inclined) >= 0.0) break;
      gamma *= 0.5;
      if (gamma < kGammaFloor) {
        underflow = true;
        break;
      }
    }
    if (underflow) {
      Fail(out, FailureKind::kStepUnderflow);
      break;
    }
    e = Rescaled(std::move(inclined));
    ++out.iterations;
    out.lower_trace.push_back(e.lower);
  }
  Finish(out, e);
  return out;
}

MdpOutcome RunGradientAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                             const SupportEval& start, double& gamma) {
  MdpOutcome out;
  SupportEval e = start;
  out.lower_trace.push_back(e.lower);
  while (!Certified(e, cfg.alpha)) {
    if (out.iterations >= cfg.max_iters) {
      out.status = MdpStatus::kIterationCap;
      break;
    }
    const Covec grad = RhoLowerGradient(e);
    SupportEval candidate;
    bool underflow = false;
    while (true) {
      const Covec p = e.p + gamma * grad;
      if (!(p.array() == 0.0).all()) {
        ++out.contact_calls;
        candidate = Evaluate(pt, p);
        if (candidate.lower > e.lower) break;
      }
      gamma *= 0.5;
      if (gamma < kGammaFloor) {
        underflow = true;
        break;
      }
    }
    if (underflow) {
      Fail(out, FailureKind::kStepUnderflow);
      break;
    }
    e = Rescaled(std::move(candidate));
    ++out.iterations;
    out.lower_trace.push_back(e.lower);
  }
  Finish(out, e);
  return out;
}

SupportEval StartAt(const ProblemAtTime& pt, const Covec& p0) {
  return Evaluate(pt, Normalized(p0));
}

void RequireAscentStart(const SupportEval& e) {
  if (e.lower < 0.0) {
    throw std::invalid_argument("ascent needs rho_lower(p0) >= 0");
  }
}

}  // namespace

GjkResult GjkDistance(const ProblemAtTime& pt, const MdpConfig& cfg,
                      const Covec& p0) {
  cfg.Validate();
  GjkResult out;
  SupportEval e = Evaluate(pt, p0);
  out.contact_calls = 1;
  out.lower = e.lower;
  StateVec s = -e.chord();
  VertexSet v(pt.reach.dim());
  v.Insert(s);
  double norm = s.norm();
  while (norm > cfg.epsilon) {
    e = Evaluate(pt, Transposed(StateVec(-s)));
    ++out.contact_calls;
    out.lower = e.lower;
    if (norm - e.lower <= cfg.epsilon) {
      out.gap_certified = true;
      out.last_eval = e;
      break;
    }
    if (out.iterations >= cfg.max_iters) {
      out.status = MdpStatus::kIterationCap;
      break;
    }
    ++out.iterations;
    const bool added = v.Insert(-e.chord());
    HullPoint h = NearestInHull(v);
    const double next = h.s.norm();
    if (!added || !(next < norm)) {
      out.status = MdpStatus::kFailed;
      out.failure = FailureKind::kDistanceNotDecreasing;
      break;
    }
    s = h.s;
    v = std::move(h.kept);
    norm = next;
    out.encloses_origin = h.encloses_origin;
  }
  out.s = s;
  return out;
}

MdpOutcome GjkStar(const ProblemAtTime& pt, const MdpConfig& cfg,
                   const Covec& p0) {
  cfg.Validate();
  MdpOutcome out = RunGjkStar(pt, cfg, StartAt(pt, p0));
  ++out.contact_calls;
  return out;
}

MdpOutcome GilbertDistance(const ProblemAtTime& pt, const MdpConfig& cfg,
                           const Covec& p0) {
  cfg.Validate();
  MdpOutcome out = RunGilbert(pt, cfg, StartAt(pt, p0));
  ++out.contact_calls;
  return out;
}

MdpOutcome SteepestAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0, double& gamma) {
  cfg.Validate();
  const SupportEval start = StartAt(pt, p0);
  RequireAscentStart(start);
  MdpOutcome out = RunSteepestAscent(pt, cfg, start, gamma);
  ++out.contact_calls;
  return out;
}

MdpOutcome SteepestAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0) {
  double gamma = cfg.gamma0;
  return SteepestAscent(pt, cfg, p0, gamma);
}

MdpOutcome GradientAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0, double& gamma) {
  cfg.Validate();
  const SupportEval start = StartAt(pt, p0);
  RequireAscentStart(start);
  MdpOutcome out = RunGradientAscent(pt, cfg, start, gamma);
  ++out.contact_calls;
  return out;
}

MdpOutcome GradientAscent(const ProblemAtTime& pt, const MdpConfig& cfg,
                          const Covec& p0) {
  double gamma = cfg.gamma0;
  return GradientAscent(pt, cfg, p0, gamma);
}

std::string_view DistanceAlgorithmName(DistanceAlgorithm kind) {
  switch (kind) {
    case DistanceAlgorithm::kGjkStar:
      return "gjk";
    case DistanceAlgorithm::kGilbert:
      return "g";
    case DistanceAlgorithm::kSteepestAscent:
      return "sa";
    case DistanceAlgorithm::kGradientAscent:
      return "ga";
  }
  return "?";
}

std::optional<DistanceAlgorithm> ParseDistanceAlgorithm(std::string_view s) {
  for (DistanceAlgorithm k :
       {DistanceAlgorithm::kGjkStar, DistanceAlgorithm::kGilbert,
        DistanceAlgorithm::kSteepestAscent,
        DistanceAlgorithm::kGradientAscent}) {
    if (DistanceAlgorithmName(k) == s) return k;
  }
  return std::nullopt;
}

MdpOutcome RunDistanceAlgorithm(DistanceAlgorithm kind,
                                const ProblemAtTime& pt, const MdpConfig& cfg,
                                const SupportEval& start, double& gamma) {
  switch (kind) {
    case DistanceAlgorithm::kGjkStar:
      return RunGjkStar(pt, cfg, start);
    case DistanceAlgorithm::kGilbert:
      return RunGilbert(pt, cfg, start);
    case DistanceAlgorithm::kSteepestAscent:
      return RunSteepestAscent(pt, cfg, start, gamma);
    case DistanceAlgorithm::kGradientAscent:
      return RunGradientAscent(pt, cfg, start, gamma);
  }
  throw std::invalid_argument("unknown distance algorithm");
}

}  // namespace mtpls
