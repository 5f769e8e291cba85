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

#ifndef MTPLS_LINEAR_DYNAMICS_H_
#define MTPLS_LINEAR_DYNAMICS_H_

#include "mtpls/counters.h"
#include "mtpls/geometry.h"
#include "mtpls/types.h"

namespace mtpls {

// ds/dt = A(t) s + u with u in a strictly convex control set U.
class LinearPlant {
 public:
  virtual ~LinearPlant() = default;
  virtual int dim() const = 0;
  virtual Matrix AMatrix(Time t) const = 0;
  // argmax_{u in U} p * u.
  virtual StateVec UExtremal(const Covec& p) const = 0;
  // lim u_E(p + h dp) as h -> 0+. Integrators sample the control at step
  // ends, where the extremal control may only exist as a one-sided limit.
  virtual StateVec UExtremalLimit(const Covec& p, const Covec& dp) const {
    (void)dp;
    return UExtremal(p);
  }
  virtual StateVec s0() const = 0;
  // Bound v_R on |A(t) s + u| over reachable states.
  virtual double speed_bound() const = 0;

  virtual bool has_analytic_contact() const { return false; }
  // s_R(t)(p). Throws std::logic_error unless has_analytic_contact().
  virtual StateVec AnalyticContact(Time t, const Covec& p) const;
};

struct IntegratorConfig {
  double tau = 1e-3;  // RK4 step
  Time t_max = 1e3;   // boosting gives up beyond this time

  void Validate() const;
};

enum class ContactEngine { kAnalytic, kNumeric };

// Contact point of the reachable set by backward adjoint integration to 0
// followed by a joint forward integration of state and adjoint.
StateVec Rk4Contact(const LinearPlant& plant, const IntegratorConfig& cfg,
                    Time t, const Covec& p);

// R(t) as a convex body. Every contact call adds one to n_s and t to i_s of
// `counters`, whichever engine produces it.
class ReachableBody final : public ConvexBody {
 public:
  ReachableBody(const LinearPlant& plant, Time t, ContactEngine engine,
                const IntegratorConfig& cfg, RunCounters* counters = nullptr);

  int dim() const override { return plant_.dim(); }
  StateVec Contact(const Covec& p) const override;

  Time t() const { return t_; }

 private:
  const LinearPlant& plant_;
  Time t_;
  ContactEngine engine_;
  IntegratorConfig cfg_;
  RunCounters* counters_;
};

struct BoostResult {
  Time t = 0.0;
  Covec p;
  StateVec s;
  long steps = 0;
  bool diverged = false;
};

// Follows the extremal trajectory through (t, p, s) with fixed steps until
// p(t) * (s_G(t)(-p(t)) - s(t)) > 0 fails, returning the last triple that
// satisfied it. Adds the integrated span to i_f and one call to n_f.
BoostResult Rk4Boost(const LinearPlant& plant, const MovingBody& target,
                     const IntegratorConfig& cfg, Time t, const Covec& p,
                     const StateVec& s, RunCounters* counters = nullptr);

// One classic RK4 step of the joint state/adjoint system, halved around
// switches of the extremal control.
void Rk4JointStep(const LinearPlant& plant, Time t, double h, StateVec& s,
                  Covec& p);

// p * exp((T - t) A) for constant A.
Covec AdjointFlowConst(const Matrix& a, Time t, Time t_final, const Covec& p);

// d/dt rho_lower(t, p) for fixed p, given s = s_R(t)(p).
double RhoLowerTimeDerivative(const LinearPlant& plant,
                              const MovingBody& target, Time t,
                              const Covec& p, const StateVec& s_reach);
// Same, computing s_R(t)(p) analytically, or by RK4 when the plant has no
// closed form.
double RhoLowerTimeDerivative(const LinearPlant& plant,
                              const MovingBody& target, Time t,
                              const Covec& p,
                              const IntegratorConfig& cfg = {});

// A = 0 with the unit ball as control set: R(t) is the ball of radius t
// around s0.
class IntegratorFreePlant final : public LinearPlant {
 public:
  explicit IntegratorFreePlant(StateVec s0) : s0_(std::move(s0)) {}

  int dim() const override { return static_cast<int>(s0_.size()); }
  Matrix AMatrix(Time) const override;
  StateVec UExtremal(const Covec& p) const override;
  StateVec s0() const override { return s0_; }
  double speed_bound() const override { return 1.0; }
  bool has_analytic_contact() const override { return true; }
  StateVec AnalyticContact(Time t, const Covec& p) const override;

 private:
  StateVec s0_;
};

// Constant A with the unit ball as control set. No closed-form contact.
class ConstantPlant final : public LinearPlant {
 public:
  ConstantPlant(Matrix a, StateVec s0, double speed_bound);

  int dim() const override { return static_cast<int>(s0_.size()); }
  Matrix AMatrix(Time) const override { return a_; }
  StateVec UExtremal(const Covec& p) const override;
  StateVec s0() const override { return s0_; }
  double speed_bound() const override { return speed_bound_; }

 private:
  Matrix a_;
  StateVec s0_;
  double speed_bound_;
};

}  // namespace mtpls

#endif  // MTPLS_LINEAR_DYNAMICS_H_
