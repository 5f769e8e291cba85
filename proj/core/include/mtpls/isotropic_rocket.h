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

#ifndef MTPLS_ISOTROPIC_ROCKET_H_
#define MTPLS_ISOTROPIC_ROCKET_H_

#include "mtpls/geometry.h"
#include "mtpls/linear_dynamics.h"
#include "mtpls/types.h"

namespace mtpls {

// Planar point mass with linear drag and unit thrust of free direction.
// State (x, y, vx, vy).
struct RocketScenario {
  double v0 = 0.0;  // initial speed along x
  double s1 = 0.0;  // target initial position
  double s2 = 0.0;
  double v1 = 0.0;  // target velocity
  double v2 = 0.0;

  // Throws unless v0 in [0, 1) and v1^2 + v2^2 < 1.
  void Validate() const;
  double target_speed() const;
};

inline constexpr int kRocketDim = 4;

Matrix RocketA();
Matrix RocketPhi(Time t);
// (0, 0, p3, p4) / |(p3, p4)|.
StateVec RocketUExtremal(const Covec& p);
// p * exp((T - t) A).
Covec RocketAdjoint(Time t, Time t_final, const Covec& p);
// s_R(t)(p) in closed form. Falls back to adaptive quadrature when the
// closed form is not finite; such calls are counted as warnings.
StateVec RocketContact(double v0, Time t, const Covec& p);
// Process-wide number of quadrature fallbacks taken by RocketContact.
long RocketQuadratureFallbacks();
// (s1, s2, v1 - v0, v2) normalized. Throws when it vanishes.
Covec InitialSupport(const RocketScenario& sc);

class RocketPlant final : public LinearPlant {
 public:
  explicit RocketPlant(double v0);

  int dim() const override { return kRocketDim; }
  Matrix AMatrix(Time) const override { return RocketA(); }
  // Zero where the velocity part of p vanishes: every control maximizes
  // there, and integrators may sample such instants.
  StateVec UExtremal(const Covec& p) const override;
  // Steers along the velocity part of dp where that of p vanishes.
  StateVec UExtremalLimit(const Covec& p, const Covec& dp) const override;
  StateVec s0() const override;
  double speed_bound() const override;
  bool has_analytic_contact() const override { return true; }
  StateVec AnalyticContact(Time t, const Covec& p) const override {
    return RocketContact(v0_, t, p);
  }

 private:
  double v0_;
};

// The target state (s1 + v1 t, s2 + v2 t, v1, v2).
MovingPointBody RocketTarget(const RocketScenario& sc);

}  // namespace mtpls

#endif  // MTPLS_ISOTROPIC_ROCKET_H_
