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

#include "mtpls/linear_dynamics.h"

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>
#include <unsupported/Eigen/MatrixFunctions>

namespace mtpls {

StateVec LinearPlant::AnalyticContact(Time, const Covec&) const {
  throw std::logic_error("plant has no closed-form contact function");
}

void IntegratorConfig::Validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
}

namespace {

// Fixed step with a shortened last step; `remaining` is what is left.
double StepFor(double remaining, double tau) {
  return remaining >= tau ? tau : remaining;
}

}  // namespace

namespace {

// Returns the dot product of the controls used at the two step ends.
double PlainJointStep(const LinearPlant& plant, Time t, double h, StateVec& s,
                      Covec& p) {
  const Matrix a0 = plant.AMatrix(t);
  const Matrix am = plant.AMatrix(t + 0.5 * h);
  const Matrix a1 = plant.AMatrix(t + h);

  // Step ends take the control's limit from inside the step.
  const Covec kp1 = -p * a0;
  const StateVec u1 = plant.UExtremalLimit(p, kp1);
  const StateVec ks1 = a0 * s + u1;
  const Covec p2 = p + 0.5 * h * kp1;
  const Covec kp2 = -p2 * am;
  const StateVec ks2 = am * (s + 0.5 * h * ks1) + plant.UExtremal(p2);
  const Covec p3 = p + 0.5 * h * kp2;
  const Covec kp3 = -p3 * am;
  const StateVec ks3 = am * (s + 0.5 * h * ks2) + plant.UExtremal(p3);
  const Covec p4 = p + h * kp3;
  const Covec kp4 = -p4 * a1;
  const StateVec u4 = plant.UExtremalLimit(p4, -kp4);
  const StateVec ks4 = a1 * (s + h * ks3) + u4;

  p += (h / 6.0) * (kp1 + 2.0 * kp2 + 2.0 * kp3 + kp4);
  s += (h / 6.0) * (ks1 + 2.0 * ks2 + 2.0 * ks3 + ks4);
  return u1.dot(u4);
}

// Bang-bang switches inside a step cost O(h); halving around them brings
// the step containing the switch down to about h / 2^kMaxSplits.
constexpr int kMaxSplits = 40;

void JointStep(const LinearPlant& plant, Time t, double h, StateVec& s,
               Covec& p, int depth) {
  StateVec s1 = s;
  Covec p1 = p;
  if (PlainJointStep(plant, t, h, s1, p1) < 0.0 && depth < kMaxSplits) {
    JointStep(plant, t, 0.5 * h, s, p, depth + 1);
    JointStep(plant, t + 0.5 * h, 0.5 * h, s, p, depth + 1);
    return;
  }
  s = std::move(s1);
  p = std::move(p1);
}

// The adjoint at r - h from its value q at r.
Covec AdjointBackStep(const LinearPlant& plant, Time r, double h,
                      const Covec& q) {
  const Matrix a0 = plant.AMatrix(r);
  const Matrix am = plant.AMatrix(r - 0.5 * h);
  const Matrix a1 = plant.AMatrix(r - h);
  const Covec k1 = q * a0;
  const Covec k2 = (q + 0.5 * h * k1) * am;
  const Covec k3 = (q + 0.5 * h * k2) * am;
  const Covec k4 = (q + h * k3) * a1;
  return q + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// RK4 for ds/dt = A s + u_E(q(r)) on [r, r + h], given the adjoint at both
// ends; the midpoint value comes from a half step back from qb.
void StateStep(const LinearPlant& plant, Time r, double h, const Covec& qa,
               const Covec& qb, StateVec& s, int depth) {
  const Matrix a0 = plant.AMatrix(r);
  const Matrix am = plant.AMatrix(r + 0.5 * h);
  const Matrix a1 = plant.AMatrix(r + h);
  const Covec qm = AdjointBackStep(plant, r + h, 0.5 * h, qb);
  const StateVec ua = plant.UExtremalLimit(qa, -qa * a0);
  const StateVec ub = plant.UExtremalLimit(qb, qb * a1);
  if (ua.dot(ub) < 0.0 && depth < kMaxSplits) {
    StateStep(plant, r, 0.5 * h, qa, qm, s, depth + 1);
    StateStep(plant, r + 0.5 * h, 0.5 * h, qm, qb, s, depth + 1);
    return;
  }
  const StateVec um = plant.UExtremal(qm);
  const StateVec k1 = a0 * s + ua;
  const StateVec k2 = am * (s + 0.5 * h * k1) + um;
  const StateVec k3 = am * (s + 0.5 * h * k2) + um;
  const StateVec k4 = a1 * (s + h * k3) + ub;
  s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

void Rk4JointStep(const LinearPlant& plant, Time t, double h, StateVec& s,
                  Covec& p) {
  JointStep(plant, t, h, s, p, 0);
}

StateVec Rk4Contact(const LinearPlant& plant, const IntegratorConfig& cfg,
                    Time t, const Covec& p) {
  RequireSupportVector(p);
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  cfg.Validate();

  // Grid 0 = r_0 < ... < r_m = t, then the adjoint dp/dt = -p A(t) backward
  // over it. The state pass reads the adjoint from there rather than
  // integrating it forward again, which would drift most where the control
  // is most sensitive (the velocity costate near zero).
  thread_local std::vector<Time> grid;
  thread_local std::vector<Covec> adjoint;
  grid.assign(1, 0.0);
  for (Time r = 0.0; r < t;) {
    const double h = StepFor(t - r, cfg.tau);
    r = (h == t - r) ? t : r + h;
    grid.push_back(r);
  }
  const size_t m = grid.size() - 1;
  adjoint.resize(m + 1);
  adjoint[m] = p;
  for (size_t k = m; k > 0; --k) {
    adjoint[k - 1] =
        AdjointBackStep(plant, grid[k], grid[k] - grid[k - 1], adjoint[k]);
  }

  StateVec s = plant.s0();
  for (size_t k = 0; k < m; ++k) {
    StateStep(plant, grid[k], grid[k + 1] - grid[k], adjoint[k],
              adjoint[k + 1], s, 0);
  }
  return s;
}

ReachableBody::ReachableBody(const LinearPlant& plant, Time t,
                             ContactEngine engine,
                             const IntegratorConfig& cfg,
                             RunCounters* counters)
    : plant_(plant), t_(t), engine_(engine), cfg_(cfg), counters_(counters) {
  if (engine == ContactEngine::kAnalytic && !plant.has_analytic_contact()) {
    throw std::invalid_argument("plant has no closed-form contact function");
  }
}

StateVec ReachableBody::Contact(const Covec& p) const {
  if (counters_ != nullptr) {
    ++counters_->n_s;
    counters_->i_s += t_;
  }
  return engine_ == ContactEngine::kAnalytic
             ? plant_.AnalyticContact(t_, p)
             : Rk4Contact(plant_, cfg_, t_, p);
}

BoostResult Rk4Boost(const LinearPlant& plant, const MovingBody& target,
                     const IntegratorConfig& cfg, Time t, const Covec& p,
                     const StateVec& s, RunCounters* counters) {
  RequireSupportVector(p);
  cfg.Validate();
  BoostResult out{t, p, s, 0, false};
  Time tc = t;
  Covec pc = p;
  StateVec sc = s;
  while (Pair(pc, target.ContactAt(tc, -pc) - sc) > 0.0) {
    out.t = tc;
    out.p = pc;
    out.s = sc;
    if (tc > cfg.t_max) {
      out.diverged = true;
      break;
    }
    Rk4JointStep(plant, tc, cfg.tau, sc, pc);
    tc += cfg.tau;
    ++out.steps;
  }
  if (counters != nullptr) {
    counters->i_f += static_cast<double>(out.steps) * cfg.tau;
    ++counters->n_f;
  }
  return out;
}

Covec AdjointFlowConst(const Matrix& a, Time t, Time t_final,
                       const Covec& p) {
  if (t == t_final) return p;
  const Eigen::MatrixXd m = (t_final - t) * Eigen::MatrixXd(a);
  const Eigen::MatrixXd e = m.exp();
  return p * Matrix(e);
}

double RhoLowerTimeDerivative(const LinearPlant& plant,
                              const MovingBody& target, Time t,
                              const Covec& p, const StateVec& s_reach) {
  RequireSupportVector(p);
  const StateVec rate = target.VelocityAt(t, -p) -
                        plant.AMatrix(t) * s_reach - plant.UExtremal(p);
  return Pair(p, rate) / p.norm();
}

double RhoLowerTimeDerivative(const LinearPlant& plant,
                              const MovingBody& target, Time t,
                              const Covec& p, const IntegratorConfig& cfg) {
  const StateVec s = plant.has_analytic_contact()
                         ? plant.AnalyticContact(t, p)
                         : Rk4Contact(plant, cfg, t, p);
  return RhoLowerTimeDerivative(plant, target, t, p, s);
}

Matrix IntegratorFreePlant::AMatrix(Time) const {
  return Matrix::Zero(dim(), dim());
}

StateVec IntegratorFreePlant::UExtremal(const Covec& p) const {
  RequireSupportVector(p);
  return Transposed(p) / p.norm();
}

StateVec IntegratorFreePlant::AnalyticContact(Time t, const Covec& p) const {
  return s0_ + t * UExtremal(p);
}

ConstantPlant::ConstantPlant(Matrix a, StateVec s0, double speed_bound)
    : a_(std::move(a)), s0_(std::move(s0)), speed_bound_(speed_bound) {
  if (a_.rows() != s0_.size() || a_.cols() != s0_.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
}

StateVec ConstantPlant::UExtremal(const Covec& p) const {
  RequireSupportVector(p);
  return Transposed(p) / p.norm();
}

}  // namespace mtpls
