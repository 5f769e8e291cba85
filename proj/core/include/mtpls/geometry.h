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

#ifndef MTPLS_GEOMETRY_H_
#define MTPLS_GEOMETRY_H_

#include "mtpls/types.h"

namespace mtpls {

// A strictly convex compact set described by its contact function
// s_M(p) = argmax_{s in M} p * s.
class ConvexBody {
 public:
  virtual ~ConvexBody() = default;
  virtual int dim() const = 0;
  // p must be nonzero. The result does not depend on the length of p.
  virtual StateVec Contact(const Covec& p) const = 0;
};

// A strictly convex compact set that moves with bounded speed.
class MovingBody {
 public:
  virtual ~MovingBody() = default;
  virtual int dim() const = 0;
  virtual StateVec ContactAt(Time t, const Covec& p) const = 0;
  // d/dt of ContactAt(t, p).
  virtual StateVec VelocityAt(Time t, const Covec& p) const = 0;
  virtual double speed_bound() const = 0;
};

StateVec BallContact(const StateVec& center, double radius, const Covec& p);

// p * (s_M(p) - s). Nonnegative for members s of the body.
double SupportGap(const Covec& p, const StateVec& s, const ConvexBody& body);

StateVec MovingPointContact(const StateVec& g0, const StateVec& gvel, Time t,
                            const Covec& p);

class BallBody final : public ConvexBody {
 public:
  // Throws std::invalid_argument unless radius > 0.
  BallBody(StateVec center, double radius);

  int dim() const override { return static_cast<int>(center_.size()); }
  StateVec Contact(const Covec& p) const override;

  const StateVec& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  StateVec center_;
  double radius_;
};

// A single point. Degenerate but admissible as a target.
class PointBody final : public ConvexBody {
 public:
  explicit PointBody(StateVec point) : point_(std::move(point)) {}

  int dim() const override { return static_cast<int>(point_.size()); }
  StateVec Contact(const Covec& p) const override;

  const StateVec& point() const { return point_; }

 private:
  StateVec point_;
};

// A point g0 + t * gvel.
class MovingPointBody final : public MovingBody {
 public:
  MovingPointBody(StateVec g0, StateVec gvel);

  int dim() const override { return static_cast<int>(g0_.size()); }
  StateVec ContactAt(Time t, const Covec& p) const override;
  StateVec VelocityAt(Time t, const Covec& p) const override;
  double speed_bound() const override { return gvel_.norm(); }

 private:
  StateVec g0_;
  StateVec gvel_;
};

// A ball whose center moves linearly.
class MovingBallBody final : public MovingBody {
 public:
  MovingBallBody(StateVec c0, StateVec cvel, double radius);

  int dim() const override { return static_cast<int>(c0_.size()); }
  StateVec ContactAt(Time t, const Covec& p) const override;
  StateVec VelocityAt(Time t, const Covec& p) const override;
  double speed_bound() const override { return cvel_.norm(); }

 private:
  StateVec c0_;
  StateVec cvel_;
  double radius_;
};

// The moving body frozen at time t. Holds a reference to `body`.
class FrozenBody final : public ConvexBody {
 public:
  FrozenBody(const MovingBody& body, Time t) : body_(body), t_(t) {}

  int dim() const override { return body_.dim(); }
  StateVec Contact(const Covec& p) const override {
    return body_.ContactAt(t_, p);
  }

 private:
  const MovingBody& body_;
  Time t_;
};

}  // namespace mtpls

#endif  // MTPLS_GEOMETRY_H_
