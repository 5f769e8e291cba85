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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mtpls/isotropic_rocket.h"
#include "mtpls/min_time.h"
#include "test_support.h"

namespace mtpls {
namespace {

using testing::Co;
using testing::Rng;
using testing::Vec;

constexpr MinTimeAlgorithm kSolvers[] = {MinTimeAlgorithm::kNeustadtEaton,
                                         MinTimeAlgorithm::kBarrGilbert,
                                         MinTimeAlgorithm::kSemiAnalytic};

const char* Name(MinTimeAlgorithm a) {
  switch (a) {
    case MinTimeAlgorithm::kNeustadtEaton:
      return "ne";
    case MinTimeAlgorithm::kBarrGilbert:
      return "bg";
    case MinTimeAlgorithm::kSemiAnalytic:
      return "s";
  }
  return "?";
}

// rho_upper(t, p) from a fresh reachable set, outside the solver.
double UpperAt(const MinTimeProblem& pr, Time t, const Covec& p) {
  return EstimatesAt(pr, t, p).upper;
}

// A = 0 and the unit ball as control set, against the point (3, 0).
struct FreePlant : ::testing::Test {
  IntegratorFreePlant plant{Vec({0, 0})};
  MovingPointBody target{Vec({3, 0}), Vec({0, 0})};
  MinTimeProblem problem{plant, target};
};

TEST_F(FreePlant, TargetAtInitialStateIsTrivial) {
  const MovingPointBody here(Vec({0, 0}), Vec({0.1, 0}));
  const MinTimeProblem pr{plant, here};
  for (MinTimeAlgorithm a : kSolvers) {
    const MtplsOutcome o = SolveMinTime(a, pr, {}, Co({1, 0}));
    EXPECT_EQ(o.status, MtplsStatus::kTrivialHitAtZero) << Name(a);
    EXPECT_EQ(o.t_star, 0.0);
    EXPECT_TRUE(o.ok());
  }
  EXPECT_EQ(ReferenceTStar(pr).upper, 0.0);
}

TEST_F(FreePlant, SolversFindDistanceOverSpeed) {
  for (double eps : {1e-2, 1e-4}) {
    MtplsConfig cfg;
    cfg.epsilon = eps;
    for (MinTimeAlgorithm a : kSolvers) {
      SCOPED_TRACE(Name(a));
      const MtplsOutcome o = SolveMinTime(a, problem, cfg, Co({0.6, 0.8}));
      ASSERT_EQ(o.status, MtplsStatus::kConverged);
      if (a == MinTimeAlgorithm::kSemiAnalytic) {
        EXPECT_GE(o.t_star, 3.0 - eps);
        EXPECT_LE(o.t_star, 3.0);
      } else {
        EXPECT_NEAR(o.t_star, 3.0, eps + cfg.integrator.tau * 1.0);
      }
      EXPECT_LE(UpperAt(problem, o.t_star, o.p_star), eps);
    }
  }
}

TEST_F(FreePlant, NumericEngineAgrees) {
  const MinTimeProblem numeric{plant, target, ContactEngine::kNumeric};
  MtplsConfig cfg;
  cfg.epsilon = 1e-4;
  for (MinTimeAlgorithm a : kSolvers) {
    const MtplsOutcome o = SolveMinTime(a, numeric, cfg, Co({0.6, 0.8}));
    ASSERT_TRUE(o.ok()) << Name(a);
    EXPECT_NEAR(o.t_star, 3.0, 2e-3) << Name(a);
  }
}

TEST_F(FreePlant, ReferenceOracle) {
  const ReferenceBracket b = ReferenceTStar(problem);
  EXPECT_NEAR(b.lower, 3.0, 1e-8);
  EXPECT_NEAR(b.upper, 3.0, 1e-8);
  EXPECT_LE(b.lower, b.upper);
}

TEST_F(FreePlant, RunawayTarget) {
  const MovingPointBody away(Vec({3, 0}), Vec({1.5, 0}));
  const MinTimeProblem pr{plant, away};
  MtplsConfig cfg;
  cfg.horizon_cap = 50.0;
  cfg.integrator.t_max = 50.0;
  cfg.integrator.tau = 1e-2;
  const MtplsOutcome s = SemiAnalytic(pr, cfg, Co({1, 0}));
  EXPECT_EQ(s.status, MtplsStatus::kHorizonExceeded);
  EXPECT_FALSE(s.ok());
  const MtplsOutcome ne = NeustadtEaton(pr, cfg, Co({1, 0}));
  EXPECT_EQ(ne.status, MtplsStatus::kFailed);
  ASSERT_TRUE(ne.failure.has_value());
  EXPECT_EQ(FailureCode(*ne.failure), 4);
  ReferenceOptions ro;
  ro.horizon = 40.0;
  try {
    ReferenceTStar(pr, ro);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "target unreachable on horizon");
  }
}

TEST_F(FreePlant, BoltyanskiiVariantConverges) {
  MtplsConfig cfg;
  cfg.epsilon = 1e-3;
  cfg.boltyanskii_step = true;
  const MtplsOutcome o = NeustadtEaton(problem, cfg, Co({0.6, 0.8}));
  ASSERT_TRUE(o.ok());
  EXPECT_NEAR(o.t_star, 3.0, 1e-2);
}

TEST(MtplsConfig, Validation) {
  MtplsConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.epsilon = 0.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = {};
  c.integrator.tau = -1.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = {};
  c.f_call_cap = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(MtplsStatus, Names) {
  EXPECT_EQ(MtplsStatusName(MtplsStatus::kConverged), "converged");
  EXPECT_EQ(MtplsStatusName(MtplsStatus::kTrivialHitAtZero), "trivial");
  EXPECT_EQ(MtplsStatusName(MtplsStatus::kFailed), "failed");
  EXPECT_EQ(MtplsStatusName(MtplsStatus::kIterationCap), "capped");
  EXPECT_EQ(MtplsStatusName(MtplsStatus::kHorizonExceeded), "horizon");
}

TEST(FailureMonitor, Examples) {
  {
    FailureMonitor m;
    EXPECT_EQ(m.OnEstimates(1.0 + 1e-9, 1.0, false), FailureKind::kNegativeDelta);
  }
  {
    FailureMonitor m;
    // Cancellation-sized negatives are not failures.
    EXPECT_FALSE(m.OnEstimates(1.0 + 1e-16, 1.0, true).has_value());
    EXPECT_FALSE(m.OnEstimates(-0.5, 1.0, false).has_value());
    EXPECT_EQ(m.OnEstimates(-0.5, 1.0, true), FailureKind::kNegativeLower);
  }
  {
    FailureMonitor m;
    EXPECT_FALSE(m.OnTime(1.0).has_value());
    EXPECT_FALSE(m.OnTime(1.0).has_value());
    EXPECT_EQ(m.OnTime(0.999), FailureKind::kTimeDecreasing);
  }
  {
    FailureMonitor m;
    for (int i = 0; i < 10000; ++i) ASSERT_FALSE(m.OnBoostCall().has_value());
    EXPECT_EQ(m.OnBoostCall(), FailureKind::kBoostCap);
    EXPECT_EQ(m.boost_calls(), 10001);
  }
  {
    FailureMonitor m;
    EXPECT_FALSE(m.OnDistanceNorm(2.0).has_value());
    EXPECT_FALSE(m.OnDistanceNorm(1.0).has_value());
    EXPECT_EQ(m.OnDistanceNorm(1.0), FailureKind::kDistanceNotDecreasing);
    m.ResetDistance();
    EXPECT_EQ(m.first(), FailureKind::kDistanceNotDecreasing);
  }
  {
    FailureMonitor m;
    EXPECT_EQ(m.OnDistanceNorm(0.0), FailureKind::kZeroDistance);
    EXPECT_EQ(m.OnStepSize(0.0), FailureKind::kStepUnderflow);
    // The first condition stays latched.
    EXPECT_EQ(m.first(), FailureKind::kZeroDistance);
  }
  for (int code = 1; code <= 7; ++code) {
    EXPECT_EQ(FailureCode(static_cast<FailureKind>(code)), code);
    EXPECT_NE(FailureName(static_cast<FailureKind>(code)), nullptr);
  }
}

class Rocket : public ::testing::Test {
 protected:
  static RocketScenario Fixed() { return {0.0, 2.0, 1.0, 0.0, 0.0}; }
};

TEST_F(Rocket, ReferenceRegression) {
  const RocketPlant plant(0.0);
  const MovingPointBody target = RocketTarget({0.0, 1.0, 0.0, 0.0, 0.0});
  const ReferenceBracket b = ReferenceTStar({plant, target});
  EXPECT_NEAR(b.mid(), 2.170077003, 2e-9);
  EXPECT_LE(b.width(), 1e-8);
}

TEST_F(Rocket, IterationCap) {
  const RocketScenario sc = Fixed();
  const RocketPlant plant(sc.v0);
  const MovingPointBody target = RocketTarget(sc);
  MtplsConfig cfg;
  cfg.max_iters = 3;
  const MtplsOutcome o = SemiAnalytic({plant, target}, cfg, InitialSupport(sc));
  EXPECT_EQ(o.status, MtplsStatus::kIterationCap);
  EXPECT_FALSE(o.failure.has_value());
  EXPECT_EQ(o.iterations, 3);
}

TEST_F(Rocket, SolversAgree) {
  const RocketScenario sc = Fixed();
  const RocketPlant plant(sc.v0);
  const MovingPointBody target = RocketTarget(sc);
  const MinTimeProblem pr{plant, target};
  MtplsConfig cfg;
  cfg.epsilon = 1e-3;
  cfg.integrator.tau = 1e-4;
  const MtplsOutcome s = SemiAnalytic(pr, cfg, InitialSupport(sc));
  ASSERT_TRUE(s.ok());
  const ReferenceBracket ref = ReferenceTStar(pr);
  EXPECT_LE(s.t_star, ref.upper + 1e-9);
  // Times where rho <= epsilon start at loose.lower.
  ReferenceOptions ro;
  ro.eta = cfg.epsilon;
  const ReferenceBracket loose = ReferenceTStar(pr, ro);
  EXPECT_GE(s.t_star, loose.lower);
  const double slack = ref.upper - loose.lower +
                       cfg.integrator.tau *
                           (plant.speed_bound() + target.speed_bound());
  for (MinTimeAlgorithm a :
       {MinTimeAlgorithm::kNeustadtEaton, MinTimeAlgorithm::kBarrGilbert}) {
    const MtplsOutcome o = SolveMinTime(a, pr, cfg, InitialSupport(sc));
    ASSERT_TRUE(o.ok()) << Name(a);
    EXPECT_GE(o.t_star, loose.lower) << Name(a);
    EXPECT_NEAR(o.t_star, s.t_star, slack) << Name(a);
    EXPECT_GT(o.counters.n_f, 0);
  }
  EXPECT_EQ(s.counters.n_f, 0);
  EXPECT_EQ(s.counters.i_f, 0.0);
}

TEST_F(Rocket, DistanceAlgorithmsAgreeInSemiAnalytic) {
  Rng rng(40);
  int checked = 0;
  for (int i = 0; i < 15; ++i) {
    const RocketScenario sc = testing::RandomScenario(rng);
    const RocketPlant plant(sc.v0);
    const MovingPointBody target = RocketTarget(sc);
    const MinTimeProblem pr{plant, target};
    ReferenceOptions ro;
    ro.eta = 1e-4;
    const ReferenceBracket ref = ReferenceTStar(pr, ro);
    if (ref.width() > 1e-3) continue;
    MtplsConfig cfg;
    cfg.epsilon = 1e-4;
    cfg.da = DistanceAlgorithm::kSteepestAscent;
    const MtplsOutcome sa = SemiAnalytic(pr, cfg, InitialSupport(sc));
    cfg.da = DistanceAlgorithm::kGjkStar;
    const MtplsOutcome gjk = SemiAnalytic(pr, cfg, InitialSupport(sc));
    if (!sa.ok() || !gjk.ok()) continue;
    EXPECT_LE(std::abs(sa.t_star - gjk.t_star),
              2 * cfg.epsilon / (plant.speed_bound() + target.speed_bound()) +
                  1e-6);
    ++checked;
  }
  EXPECT_GE(checked, 8);
}

TEST_F(Rocket, SemiAnalyticStaysBelowMinimumTime) {
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const RocketScenario sc = testing::RandomScenario(rng);
    const RocketPlant plant(sc.v0);
    const MovingPointBody target = RocketTarget(sc);
    const MinTimeProblem pr{plant, target};
    MtplsConfig cfg;
    cfg.epsilon = 1e-3;
    cfg.record_trace = true;
    const MtplsOutcome o = SemiAnalytic(pr, cfg, InitialSupport(sc));
    ASSERT_TRUE(o.ok());
    const ReferenceBracket ref = ReferenceTStar(pr);
    for (size_t k = 0; k < o.trace.size(); ++k) {
      EXPECT_LE(o.trace[k].t, ref.upper + 1e-9);
      if (k > 0 && k + 1 < o.trace.size()) {
        EXPECT_GT(o.trace[k].t, o.trace[k - 1].t);
      }
    }
  }
}

TEST_F(Rocket, CertificateHoldsOnIndependentRecomputation) {
  Rng rng(42);
  for (int i = 0; i < 10; ++i) {
    const RocketScenario sc = testing::RandomScenario(rng);
    const RocketPlant plant(sc.v0);
    const MovingPointBody target = RocketTarget(sc);
    const MinTimeProblem pr{plant, target};
    MtplsConfig cfg;
    cfg.epsilon = 1e-3;
    cfg.integrator.tau = 1e-3;
    for (MinTimeAlgorithm a : kSolvers) {
      const MtplsOutcome o = SolveMinTime(a, pr, cfg, InitialSupport(sc));
      if (!o.ok()) continue;
      EXPECT_LE(UpperAt(pr, o.t_star, o.p_star), cfg.epsilon) << Name(a);
      EXPECT_NEAR(o.p_star.norm(), 1.0, 1e-12);
    }
  }
}

TEST_F(Rocket, TraceWorkAddsUpToCounters) {
  Rng rng(43);
  for (int i = 0; i < 5; ++i) {
    const RocketScenario sc = testing::RandomScenario(rng);
    const RocketPlant plant(sc.v0);
    const MovingPointBody target = RocketTarget(sc);
    const MinTimeProblem pr{plant, target};
    MtplsConfig cfg;
    cfg.epsilon = 1e-3;
    cfg.record_trace = true;
    for (MinTimeAlgorithm a : kSolvers) {
      const MtplsOutcome o = SolveMinTime(a, pr, cfg, InitialSupport(sc));
      ASSERT_FALSE(o.trace.empty());
      RunCounters sum;
      for (const TraceEntry& e : o.trace) {
        sum += e.work;
        EXPECT_GE(e.upper, 0.0);
      }
      EXPECT_EQ(sum.n_s, o.counters.n_s) << Name(a);
      EXPECT_EQ(sum.n_f, o.counters.n_f) << Name(a);
      EXPECT_NEAR(sum.i_s, o.counters.i_s, 1e-9 * o.counters.i_s);
      EXPECT_NEAR(sum.i_f, o.counters.i_f, 1e-9 * (1 + o.counters.i_f));
      for (size_t k = 1; k < o.trace.size(); ++k) {
        EXPECT_GE(o.trace[k].t, o.trace[k - 1].t);
      }
    }
  }
}

TEST_F(Rocket, ExtremalRolloutReachesTarget) {
  Rng rng(44);
  for (int i = 0; i < 10; ++i) {
    const RocketScenario sc = testing::RandomScenario(rng);
    const RocketPlant plant(sc.v0);
    const MovingPointBody target = RocketTarget(sc);
    MtplsConfig cfg;
    cfg.epsilon = 1e-4;
    const MtplsOutcome o =
        SemiAnalytic({plant, target}, cfg, InitialSupport(sc));
    ASSERT_TRUE(o.ok());
    StateVec s = plant.s0();
    Covec p = RocketAdjoint(0.0, o.t_star, o.p_star);
    const double tau = 1e-3;
    for (Time t = 0.0; t < o.t_star;) {
      const double h = std::min(tau, o.t_star - t);
      Rk4JointStep(plant, t, h, s, p);
      t = (h == o.t_star - t) ? o.t_star : t + h;
    }
    const StateVec g = target.ContactAt(o.t_star, -o.p_star);
    EXPECT_LE((s - g).norm(), cfg.epsilon + 1e-6);
  }
}

TEST_F(Rocket, SupportVectorSettlesAsEpsilonShrinks) {
  Rng rng(45);
  for (int i = 0; i < 20; ++i) {
    const RocketScenario sc = testing::RandomScenario(rng);
    const RocketPlant plant(sc.v0);
    const MovingPointBody target = RocketTarget(sc);
    Covec p[3];
    int k = 0;
    for (int e : {3, 5, 7}) {
      MtplsConfig cfg;
      cfg.epsilon = std::pow(3.0, -e);
      const MtplsOutcome o =
          SemiAnalytic({plant, target}, cfg, InitialSupport(sc));
      ASSERT_TRUE(o.ok());
      p[k++] = o.p_star;
    }
    EXPECT_LT((p[2] - p[1]).norm(), (p[1] - p[0]).norm());
    EXPECT_LT((p[2] - p[1]).norm(), 1e-2);
  }
}

}  // namespace
}  // namespace mtpls
