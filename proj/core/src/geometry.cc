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

#include "mtpls/geometry.h"

#include <stdexcept>
#include <utility>

namespace mtpls {

void RequireSupportVector(const Covec& p) {
  if (p.size() == 0 || (p.array() == 0.0).all()) {
    throw std::invalid_argument("degenerate support vector");
  }
}

Covec Normalized(const Covec& p) {
  RequireSupportVector(p);
  return p / p.norm();
}

StateVec BallContact(const StateVec& center, double radius, const Covec& p) {
  RequireSupportVector(p);
  return center + radius * Transposed(p) / p.norm();
}

double SupportGap(const Covec& p, const StateVec& s, const ConvexBody& body) {
  RequireSupportVector(p);
  return Pair(p, body.Contact(p) - s);
}

StateVec MovingPointContact(const StateVec& g0, const StateVec& gvel, Time t,
                            const Covec& p) {
  RequireSupportVector(p);
  return g0 + t * gvel;
}

BallBody::BallBody(StateVec center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("ball radius must be positive");
  }
}

StateVec BallBody::Contact(const Covec& p) const {
  return BallContact(center_, radius_, p);
}

StateVec PointBody::Contact(const Covec& p) const {
  RequireSupportVector(p);
  return point_;
}

MovingPointBody::MovingPointBody(StateVec g0, StateVec gvel)
    : g0_(std::move(g0)), gvel_(std::move(gvel)) {
  if (g0_.size() != gvel_.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
}

StateVec MovingPointBody::ContactAt(Time t, const Covec& p) const {
  return MovingPointContact(g0_, gvel_, t, p);
}

StateVec MovingPointBody::VelocityAt(Time, const Covec& p) const {
  RequireSupportVector(p);
  return gvel_;
}

MovingBallBody::MovingBallBody(StateVec c0, StateVec cvel, double radius)
    : c0_(std::move(c0)), cvel_(std::move(cvel)), radius_(radius) {
  if (c0_.size() != cvel_.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("ball radius must be positive");
  }
}

StateVec MovingBallBody::ContactAt(Time t, const Covec& p) const {
  return BallContact(c0_ + t * cvel_, radius_, p);
}

StateVec MovingBallBody::VelocityAt(Time, const Covec& p) const {
  RequireSupportVector(p);
  return cvel_;
}

}  // namespace mtpls
