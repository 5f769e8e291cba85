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

#include "mtpls/isotropic_rocket.h"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mtpls {

namespace {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

double Dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double Cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double Norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Integrals of the control u(c) = w(c) / |w(c)|, w(c) = a + d c, over
// c in [c0, 1]:
//   vel = int u dc,  pos = int u (1 - c) / c dc.
struct ControlIntegrals {
  Vec2 vel, pos;
};

// w(c) stays on one line through the origin: u = sign(lam(c)) e.
ControlIntegrals Collinear(Vec2 a, Vec2 d, double c0, double log_c0) {
  const Vec2 e = Norm(a) >= Norm(d) ? Vec2{a.x / Norm(a), a.y / Norm(a)}
                                    : Vec2{d.x / Norm(d), d.y / Norm(d)};
  const double la = Dot(a, e), ld = Dot(d, e);
  // Antiderivative of (1 - c) / c is ln c - c.
  auto pos_anti = [](double c, double log_c) { return log_c - c; };
  double vel = 0.0, pos = 0.0;
  auto piece = [&](double lo, double log_lo, double hi, double log_hi,
                   double sign) {
    vel += sign * (hi - lo);
    pos += sign * (pos_anti(hi, log_hi) - pos_anti(lo, log_lo));
  };
  auto sign_at = [&](double c) { return la + ld * c >= 0.0 ? 1.0 : -1.0; };
  const double root = ld != 0.0 ? -la / ld : -1.0;
  if (root > c0 && root < 1.0) {
    const double log_root = std::log(root);
    piece(c0, log_c0, root, log_root, sign_at(0.5 * (c0 + root)));
    piece(root, log_root, 1.0, 0.0, sign_at(0.5 * (root + 1.0)));
  } else {
    piece(c0, log_c0, 1.0, 0.0, sign_at(0.5 * (c0 + 1.0)));
  }
  return {{vel * e.x, vel * e.y}, {pos * e.x, pos * e.y}};
}

// General case: Q(c) = |a + d c|^2 = al c^2 + be c + ga has no real root.
ControlIntegrals General(Vec2 a, Vec2 d, double c0, double log_c0) {
  const double al = Dot(d, d), be = 2.0 * Dot(a, d), ga = Dot(a, a);
  const double cr = Cross(a, d);
  const double minus_disc = 4.0 * cr * cr;  // 4 al ga - be^2
  const double sal = std::sqrt(al), sga = std::sqrt(ga);
  auto root_q = [&](double c) {
    return std::sqrt(std::max(0.0, (al * c + be) * c + ga));
  };
  // ln(2 sqrt(al) sqrt(Q) + 2 al c + be), rationalized when the sum cancels.
  auto log0 = [&](double c, double rq) {
    const double y = 2.0 * al * c + be;
    if (y >= 0.0) return std::log(2.0 * sal * rq + y);
    return std::log(minus_disc / (2.0 * sal * rq - y));
  };
  // ln((2 ga + be c + 2 sqrt(ga) sqrt(Q)) / c).
  auto log_j = [&](double c, double log_c, double rq) {
    const double z = 2.0 * ga + be * c;
    if (z >= 0.0) return std::log(z + 2.0 * sga * rq) - log_c;
    return std::log(minus_disc * c / (2.0 * sga * rq - z));
  };
  const double rq1 = root_q(1.0), rq0 = root_q(c0);
  const double i0 = (log0(1.0, rq1) - log0(c0, rq0)) / sal;
  const double i1 = (rq1 - rq0) / al - be / (2.0 * al) * i0;
  const double j = -(log_j(1.0, 0.0, rq1) - log_j(c0, log_c0, rq0)) / sga;
  ControlIntegrals out;
  out.vel = {a.x * i0 + d.x * i1, a.y * i0 + d.y * i1};
  out.pos = {a.x * j + (d.x - a.x) * i0 - d.x * i1,
             a.y * j + (d.y - a.y) * i0 - d.y * i1};
  return out;
}

std::atomic<long> quadrature_fallbacks{0};

// Adaptive quadrature of the same integrals; the switch point of a collinear
// control is passed as an extra breakpoint.
ControlIntegrals Quadrature(Vec2 a, Vec2 d, double c0) {
  using boost::math::quadrature::gauss_kronrod;
  std::vector<double> cuts{c0};
  if (Dot(d, d) > 0.0) {
    const double root = -Dot(a, d) / Dot(d, d);
    if (root > c0 && root < 1.0) cuts.push_back(root);
  }
  cuts.push_back(1.0);
  ControlIntegrals out;
  auto unit = [&](double c) {
    const Vec2 w{a.x + d.x * c, a.y + d.y * c};
    const double n = Norm(w);
    return n > 0.0 ? Vec2{w.x / n, w.y / n} : Vec2{};
  };
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    auto q = [&](auto f) {
      return gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
    };
    out.vel.x += q([&](double c) { return unit(c).x; });
    out.vel.y += q([&](double c) { return unit(c).y; });
    out.pos.x += q([&](double c) { return unit(c).x * (1.0 - c) / c; });
    out.pos.y += q([&](double c) { return unit(c).y * (1.0 - c) / c; });
  }
  return out;
}

bool Finite(const ControlIntegrals& ci) {
  return std::isfinite(ci.vel.x) && std::isfinite(ci.vel.y) &&
         std::isfinite(ci.pos.x) && std::isfinite(ci.pos.y);
}

ControlIntegrals ClosedForm(Vec2 a, Vec2 d, Time t) {
  const double c0 = std::exp(-t);
  const double na = Norm(a), nd = Norm(d);
  if (na == 0.0 || nd == 0.0 ||
      std::abs(Cross(a, d)) <= 1e-12 * na * nd) {
    return Collinear(a, d, c0, -t);
  }
  return General(a, d, c0, -t);
}

ControlIntegrals Integrate(Vec2 a, Vec2 d, Time t) {
  ControlIntegrals ci = ClosedForm(a, d, t);
  if (Finite(ci)) return ci;
  quadrature_fallbacks.fetch_add(1, std::memory_order_relaxed);
  return Quadrature(a, d, std::exp(-t));
}

}  // namespace

long RocketQuadratureFallbacks() {
  return quadrature_fallbacks.load(std::memory_order_relaxed);
}

void RocketScenario::Validate() const {
  if (!(v0 >= 0.0 && v0 < 1.0)) {
    throw std::invalid_argument("v0 must lie in [0, 1)");
  }
  if (!(v1 * v1 + v2 * v2 < 1.0)) {
    throw std::invalid_argument("target speed must be below 1");
  }
  if (!std::isfinite(s1) || !std::isfinite(s2)) {
    throw std::invalid_argument("target position must be finite");
  }
}

double RocketScenario::target_speed() const { return std::hypot(v1, v2); }

Matrix RocketA() {
  Matrix a = Matrix::Zero(kRocketDim, kRocketDim);
  a(0, 2) = 1.0;
  a(1, 3) = 1.0;
  a(2, 2) = -1.0;
  a(3, 3) = -1.0;
  return a;
}

Matrix RocketPhi(Time t) {
  const double e = std::exp(-t);
  Matrix phi = Matrix::Identity(kRocketDim, kRocketDim);
  phi(0, 2) = -std::expm1(-t);
  phi(1, 3) = phi(0, 2);
  phi(2, 2) = e;
  phi(3, 3) = e;
  return phi;
}

StateVec RocketUExtremal(const Covec& p) {
  if (p.size() != kRocketDim) throw std::invalid_argument("dimension");
  const double n = std::hypot(p(2), p(3));
  if (n == 0.0) throw std::invalid_argument("extremal control undefined");
  StateVec u(kRocketDim);
  u << 0.0, 0.0, p(2) / n, p(3) / n;
  return u;
}

Covec RocketAdjoint(Time t, Time t_final, const Covec& p) {
  if (p.size() != kRocketDim) throw std::invalid_argument("dimension");
  const double s = t_final - t;
  const double e = std::exp(-s);
  const double g = -std::expm1(-s);
  Covec out(kRocketDim);
  out << p(0), p(1), p(2) * e + p(0) * g, p(3) * e + p(1) * g;
  return out;
}

StateVec RocketContact(double v0, Time t, const Covec& p) {
  RequireSupportVector(p);
  if (p.size() != kRocketDim) throw std::invalid_argument("dimension");
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  const double e = std::exp(-t);
  const double g = -std::expm1(-t);
  StateVec s(kRocketDim);
  s << g * v0, 0.0, e * v0, 0.0;
  if (t == 0.0) return s;
  const Vec2 a{p(0), p(1)};
  const Vec2 d{p(2) - p(0), p(3) - p(1)};
  const ControlIntegrals ci = Integrate(a, d, t);
  s(0) += ci.pos.x;
  s(1) += ci.pos.y;
  s(2) += ci.vel.x;
  s(3) += ci.vel.y;
  return s;
}

Covec InitialSupport(const RocketScenario& sc) {
  Covec p(kRocketDim);
  p << sc.s1, sc.s2, sc.v1 - sc.v0, sc.v2;
  if ((p.array() == 0.0).all()) {
    throw std::invalid_argument("target starts at the initial state");
  }
  return p / p.norm();
}

RocketPlant::RocketPlant(double v0) : v0_(v0) {
  if (!(v0 >= 0.0 && v0 < 1.0)) {
    throw std::invalid_argument("v0 must lie in [0, 1)");
  }
}

StateVec RocketPlant::s0() const {
  StateVec s(kRocketDim);
  s << 0.0, 0.0, v0_, 0.0;
  return s;
}

StateVec RocketPlant::UExtremal(const Covec& p) const {
  if (p(2) == 0.0 && p(3) == 0.0) return StateVec::Zero(kRocketDim);
  return RocketUExtremal(p);
}

StateVec RocketPlant::UExtremalLimit(const Covec& p, const Covec& dp) const {
  if (p(2) != 0.0 || p(3) != 0.0) return RocketUExtremal(p);
  return UExtremal(dp);
}

double RocketPlant::speed_bound() const { return std::sqrt(5.0); }

MovingPointBody RocketTarget(const RocketScenario& sc) {
  StateVec g0(kRocketDim), gv(kRocketDim);
  g0 << sc.s1, sc.s2, sc.v1, sc.v2;
  gv << sc.v1, sc.v2, 0.0, 0.0;
  return MovingPointBody(g0, gv);
}

}  // namespace mtpls
