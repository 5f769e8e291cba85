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

#include "mtpls/min_time.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mtpls {

void MtplsConfig::Validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  integrator.Validate();
  if (f_call_cap <= 0 || max_iters <= 0 || da_max_iters <= 0) {
    throw std::invalid_argument("iteration caps must be > 0");
  }
  if (!(horizon_factor > 0.0) || !(horizon_cap > 0.0)) {
    throw std::invalid_argument("horizon must be > 0");
  }
}

std::string_view MtplsStatusName(MtplsStatus s) {
  switch (s) {
    case MtplsStatus::kConverged:
      return "converged";
    case MtplsStatus::kTrivialHitAtZero:
      return "trivial";
    case MtplsStatus::kFailed:
      return "failed";
    case MtplsStatus::kIterationCap:
      return "capped";
    case MtplsStatus::kHorizonExceeded:
      return "horizon";
  }
  return "?";
}

namespace {

SupportEval Rescaled(SupportEval e) {
  e.p /= e.p.norm();
  return e;
}

// State shared by the three solvers for one run.
class Session {
 public:
  Session(const MinTimeProblem& problem, const MtplsConfig& cfg)
      : problem_(problem), cfg_(cfg), monitor_(cfg.f_call_cap) {
    cfg.Validate();
    mdp_.epsilon = cfg.epsilon;
    mdp_.alpha = cfg.alpha;
    mdp_.max_iters = cfg.da_max_iters;
  }

  // GJK at t = 0. Returns false when the run already ended.
  bool Start(const Covec& p0) {
    out_.p_star = Normalized(p0);
    ReachableBody reach(problem_.plant, 0.0, problem_.engine,
                        cfg_.integrator, &out_.counters);
    FrozenBody target(problem_.target, 0.0);
    MdpConfig gjk_cfg = mdp_;
    const GjkResult g = GjkDistance({reach, target}, gjk_cfg, out_.p_star);
    monitor_.OnTime(0.0);
    if (g.status == MdpStatus::kIterationCap) {
      return End(MtplsStatus::kIterationCap);
    }
    const double norm = g.s.norm();
    if (norm <= cfg_.epsilon) {
      Record(0.0, g.lower, norm);
      return End(MtplsStatus::kTrivialHitAtZero);
    }
    if (g.failure) return Fail(*g.failure);
    eval_ = g.gap_certified ? Rescaled(g.last_eval)
                            : EvalAt(0.0, Transposed(StateVec(-g.s / norm)));
    Record(0.0, eval_.lower, eval_.upper);
    if (auto f = monitor_.OnEstimates(eval_.lower, eval_.upper, true)) {
      return Fail(*f);
    }
    return true;
  }

  bool Done() const { return eval_.upper <= cfg_.epsilon; }

  // One outer iteration is about to start.
  bool NextIteration() {
    if (out_.iterations >= cfg_.max_iters) {
      return End(MtplsStatus::kIterationCap);
    }
    ++out_.iterations;
    return true;
  }

  // (t, p) <- (F(t, p), p(F; t, p)).
  bool Boost() {
    if (auto f = monitor_.OnBoostCall()) return Fail(*f);
    const BoostResult b =
        Rk4Boost(problem_.plant, problem_.target, cfg_.integrator, t_,
                 eval_.p, eval_.reach, &out_.counters);
    if (b.diverged) return Fail(FailureKind::kBoostCap);
    if (auto f = monitor_.OnTime(b.t)) return Fail(*f);
    if (b.steps > 0) {
      t_ = b.t;
      const Covec p = Normalized(b.p);
      if (problem_.engine == ContactEngine::kAnalytic) {
        eval_ = EvalAt(t_, p);
      } else {
        // The boost integrated the contact point along with the adjoint.
        FrozenBody target(problem_.target, t_);
        eval_.p = p;
        eval_.reach = b.s;
        eval_.target = target.Contact(-p);
        const StateVec chord = eval_.chord();
        eval_.lower = Pair(p, chord);
        eval_.upper = chord.norm();
      }
    }
    return CheckEstimates();
  }

  // t <- f(t, p).
  bool SimpleStep() {
    const Time next =
        SimpleBoost(t_, eval_.lower, problem_.plant.speed_bound(),
                    problem_.target.speed_bound());
    if (auto f = monitor_.OnTime(next)) return Fail(*f);
    if (next > Horizon()) return End(MtplsStatus::kHorizonExceeded);
    if (next != t_) {
      t_ = next;
      eval_ = EvalAt(t_, eval_.p);
    }
    return CheckEstimates();
  }

  // p <- DA(t, p; gamma).
  bool Distance() {
    ReachableBody reach(problem_.plant, t_, problem_.engine, cfg_.integrator,
                        &out_.counters);
    FrozenBody target(problem_.target, t_);
    MdpOutcome d =
        RunDistanceAlgorithm(cfg_.da, {reach, target}, mdp_, eval_, gamma_);
    eval_ = std::move(d.eval);
    if (d.failure) return Fail(*d.failure);
    if (d.status == MdpStatus::kIterationCap) {
      return End(MtplsStatus::kIterationCap);
    }
    return CheckEstimates();
  }

  // One Eaton step p <- (p + gamma q) / |p + gamma q|.
  bool EatonStep() {
    if (eval_.upper == 0.0) return true;
    const Covec q = AscentDirection(eval_);
    const double need_base = cfg_.boltyanskii_step
                                 ? eval_.upper * eval_.upper
                                 : eval_.lower;
    while (true) {
      const Covec p = eval_.p + gamma_ * q;
      if (!(p.array() == 0.0).all()) {
        SupportEval cand = EvalAt(t_, p);
        const double need =
            cfg_.boltyanskii_step ? gamma_ * need_base : need_base;
        if (cand.lower > need) {
          eval_ = Rescaled(std::move(cand));
          break;
        }
      }
      gamma_ *= 0.5;
      if (auto f = monitor_.OnStepSize(gamma_)) return Fail(*f);
    }
    return CheckEstimates();
  }

  void EndIteration() { Record(t_, eval_.lower, eval_.upper); }

  MtplsOutcome Finish() {
    if (!ended_) out_.status = MtplsStatus::kConverged;
    out_.t_star = t_;
    if (eval_.p.size() > 0) out_.p_star = eval_.p;
    return std::move(out_);
  }

 private:
  SupportEval EvalAt(Time t, const Covec& p) {
    ReachableBody reach(problem_.plant, t, problem_.engine, cfg_.integrator,
                        &out_.counters);
    FrozenBody target(problem_.target, t);
    return Evaluate({reach, target}, p);
  }

  bool CheckEstimates() {
    if (auto f = monitor_.OnEstimates(eval_.lower, eval_.upper, true)) {
      return Fail(*f);
    }
    return true;
  }

  Time Horizon() {
    if (!horizon_) {
      const double vr = problem_.plant.speed_bound();
      const double vg = problem_.target.speed_bound();
      horizon_ = vr > vg ? cfg_.horizon_factor * first_upper_ / (vr - vg)
                         : cfg_.horizon_cap;
    }
    return *horizon_;
  }

  void Record(Time t, double lower, double upper) {
    if (out_.trace.empty() && !recorded_) first_upper_ = upper;
    recorded_ = true;
    if (!cfg_.record_trace) return;
    out_.trace.push_back({t, lower, upper, out_.counters - snapshot_});
    snapshot_ = out_.counters;
  }

  bool Fail(FailureKind k) {
    out_.failure = k;
    return End(MtplsStatus::kFailed);
  }

  bool End(MtplsStatus s) {
    out_.status = s;
    ended_ = true;
    return false;
  }

  const MinTimeProblem& problem_;
  const MtplsConfig& cfg_;
  MdpConfig mdp_;
  FailureMonitor monitor_;
  MtplsOutcome out_;
  SupportEval eval_;
  Time t_ = 0.0;
  double gamma_ = 1.0;
  bool ended_ = false;
  bool recorded_ = false;
  double first_upper_ = 0.0;
  std::optional<Time> horizon_;
  RunCounters snapshot_;
};

}  // namespace

MtplsOutcome NeustadtEaton(const MinTimeProblem& problem,
                           const MtplsConfig& cfg, const Covec& p0) {
  Session s(problem, cfg);
  if (s.Start(p0)) {
    while (!s.Done()) {
      if (!s.NextIteration() || !s.Boost()) break;
      if (!s.Done() && !s.EatonStep()) break;
      s.EndIteration();
    }
  }
  return s.Finish();
}

MtplsOutcome BarrGilbert(const MinTimeProblem& problem,
                         const MtplsConfig& cfg, const Covec& p0) {
  Session s(problem, cfg);
  if (s.Start(p0)) {
    while (!s.Done()) {
      if (!s.NextIteration() || !s.Boost()) break;
      if (!s.Done() && !s.Distance()) break;
      s.EndIteration();
    }
  }
  return s.Finish();
}

MtplsOutcome SemiAnalytic(const MinTimeProblem& problem,
                          const MtplsConfig& cfg, const Covec& p0) {
  Session s(problem, cfg);
  if (s.Start(p0)) {
    while (!s.Done()) {
      if (!s.NextIteration() || !s.SimpleStep() || !s.Distance()) break;
      s.EndIteration();
    }
  }
  return s.Finish();
}

MtplsOutcome SolveMinTime(MinTimeAlgorithm algo, const MinTimeProblem& problem,
                          const MtplsConfig& cfg, const Covec& p0) {
  switch (algo) {
    case MinTimeAlgorithm::kNeustadtEaton:
      return NeustadtEaton(problem, cfg, p0);
    case MinTimeAlgorithm::kBarrGilbert:
      return BarrGilbert(problem, cfg, p0);
    case MinTimeAlgorithm::kSemiAnalytic:
      return SemiAnalytic(problem, cfg, p0);
  }
  throw std::invalid_argument("unknown algorithm");
}

EstimatePair EstimatesAt(const MinTimeProblem& problem, Time t,
                         const Covec& p, const IntegratorConfig& cfg) {
  ReachableBody reach(problem.plant, t, problem.engine, cfg);
  FrozenBody target(problem.target, t);
  return Estimates({reach, target}, p);
}

namespace {

class Prober {
 public:
  Prober(const MinTimeProblem& problem, const ReferenceOptions& opts)
      : problem_(problem), opts_(opts) {}

  // rho(t) > eta, certified.
  bool Separated(Time t) {
    MdpConfig cfg;
    cfg.epsilon = opts_.eta;
    cfg.max_iters = opts_.gjk_max_iters;
    const GjkResult g = Run(t, cfg);
    return g.status == MdpStatus::kConverged && g.s.norm() > opts_.eta;
  }

  // rho(t) <= hit_tol, certified by a GJK iterate that short.
  bool Hit(Time t) {
    MdpConfig cfg;
    cfg.epsilon = opts_.hit_tol;
    cfg.max_iters = opts_.gjk_max_iters;
    const GjkResult g = Run(t, cfg);
    return g.encloses_origin || g.s.norm() <= opts_.hit_tol;
  }

 private:
  GjkResult Run(Time t, const MdpConfig& cfg) {
    ReachableBody reach(problem_.plant, t, problem_.engine, IntegratorConfig{});
    FrozenBody target(problem_.target, t);
    const Covec any = Covec::Ones(reach.dim());
    Covec p0 = Transposed(StateVec(target.Contact(any) - problem_.plant.s0()));
    if ((p0.array() == 0.0).all()) p0 = any;
    return GjkDistance({reach, target}, cfg, p0);
  }

  const MinTimeProblem& problem_;
  const ReferenceOptions& opts_;
};

}  // namespace

ReferenceBracket ReferenceTStar(const MinTimeProblem& problem,
                                const ReferenceOptions& opts) {
  if (!(opts.tol > 0.0) || !(opts.eta > 0.0) || !(opts.horizon > 0.0)) {
    throw std::invalid_argument("reference options must be positive");
  }
  Prober probe(problem, opts);
  if (probe.Hit(0.0)) return {0.0, 0.0};
  // Find a certified hit by doubling.
  Time hit = 0.0;
  Time miss = 0.0;
  for (Time t = 0.5; ; t *= 2.0) {
    if (t > opts.horizon) {
      throw std::runtime_error("target unreachable on horizon");
    }
    if (probe.Hit(t)) {
      hit = t;
      break;
    }
    miss = t;
  }
  Time lo = miss, hi = hit;
  while (hi - lo > opts.tol) {
    const Time mid = 0.5 * (lo + hi);
    (probe.Hit(mid) ? hi : lo) = mid;
  }
  const Time upper = hi;
  if (!probe.Separated(0.0)) return {0.0, upper};
  lo = 0.0;
  hi = upper;
  while (hi - lo > opts.tol) {
    const Time mid = 0.5 * (lo + hi);
    (probe.Separated(mid) ? lo : hi) = mid;
  }
  return {lo, upper};
}

}  // namespace mtpls
