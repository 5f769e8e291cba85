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

#include "mtpls/estimates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mtpls {

SupportEval Evaluate(const ProblemAtTime& pt, const Covec& p) {
  RequireSupportVector(p);
  SupportEval e;
  e.p = p;
  e.reach = pt.reach.Contact(p);
  e.target = pt.target.Contact(-p);
  const StateVec chord = e.target - e.reach;
  e.lower = Pair(p, chord) / p.norm();
  e.upper = chord.norm();
  return e;
}

double RhoLower(const ProblemAtTime& pt, const Covec& p) {
  return Evaluate(pt, p).lower;
}

double RhoUpper(const ProblemAtTime& pt, const Covec& p) {
  return Evaluate(pt, p).upper;
}

EstimatePair Estimates(const ProblemAtTime& pt, const Covec& p) {
  return Evaluate(pt, p).estimates();
}

Covec AscentDirection(const SupportEval& at_p) {
  if (!(at_p.upper > 0.0)) {
    throw std::invalid_argument("contact points coincide");
  }
  return Transposed(at_p.chord()) / at_p.upper - at_p.p;
}

Covec AscentDirection(const ProblemAtTime& pt, const Covec& p) {
  return AscentDirection(Evaluate(pt, p));
}

Covec RhoLowerGradient(const SupportEval& at_p) {
  const double norm = at_p.p.norm();
  return Transposed(at_p.chord()) / norm -
         at_p.p * (at_p.lower / (norm * norm));
}

double XiPrime(const ProblemAtTime& pt, const Covec& p, const Covec& q,
               double gamma, SupportEval* inclined) {
  const Covec tilted = p + gamma * q;
  if ((tilted.array() == 0.0).all()) {
    throw std::invalid_argument("degenerate inclined vector");
  }
  SupportEval e = Evaluate(pt, tilted);
  const double xi = Pair(q, e.chord());
  if (inclined != nullptr) *inclined = std::move(e);
  return xi;
}

double XiPrime(const ProblemAtTime& pt, const Covec& p, double gamma) {
  const Covec unit = Normalized(p);
  const SupportEval at_p = Evaluate(pt, unit);
  if (at_p.upper == 0.0) return 0.0;
  return XiPrime(pt, unit, AscentDirection(at_p), gamma);
}

int StepExponent(const ProblemAtTime& pt, const Covec& p, double gamma,
                 int max_halvings) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("step size must lie in (0, 1]");
  }
  const Covec unit = Normalized(p);
  const SupportEval at_p = Evaluate(pt, unit);
  if (!(at_p.delta() > 0.0)) {
    throw std::invalid_argument("step exponent needs delta > 0");
  }
  if (at_p.lower < 0.0) {
    throw std::invalid_argument("step exponent needs rho_lower >= 0");
  }
  const Covec q = AscentDirection(at_p);
  for (int n = 1; n <= max_halvings + 1; ++n) {
    if (XiPrime(pt, unit, q, gamma) >= 0.0) return n;
    gamma *= 0.5;
  }
  throw std::runtime_error("step size underflow");
}

Time SimpleBoost(Time t, double lower, double v_reach, double v_target) {
  if (!(v_reach + v_target > 0.0)) {
    throw std::invalid_argument("static problem, f undefined");
  }
  return lower >= 0.0 ? t + lower / (v_reach + v_target) : t;
}

namespace {

double RadicalInverse(long k, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (k > 0) {
    r += f * static_cast<double>(k % base);
    k /= base;
    f *= inv;
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace

Covec SphereDirection(int dim, long k, int total) {
  Covec p(dim);
  if (dim == 1) {
    p(0) = (k % 2 == 0) ? 1.0 : -1.0;
    return p;
  }
  if (dim == 2) {
    const double phi = 2.0 * std::numbers::pi * (k + 0.5) / total;
    p << std::cos(phi), std::sin(phi);
    return p;
  }
  // Halton points pushed through Box-Muller give near-Gaussian vectors.
  for (int i = 0; i < dim; i += 2) {
    const double u1 = RadicalInverse(k + 1, kPrimes[i]);
    const double u2 = RadicalInverse(k + 1, kPrimes[i + 1]);
    const double r = std::sqrt(-2.0 * std::log(std::max(u1, 1e-300)));
    p(i) = r * std::cos(2.0 * std::numbers::pi * u2);
    if (i + 1 < dim) p(i + 1) = r * std::sin(2.0 * std::numbers::pi * u2);
  }
  const double n = p.norm();
  if (n == 0.0) {
    p.setZero();
    p(0) = 1.0;
    return p;
  }
  return p / n;
}

DistanceBracket BruteForceDistance(const ProblemAtTime& pt, int samples,
                                   unsigned seed) {
  if (samples < 8) throw std::invalid_argument("need at least 8 samples");
  const int dim = pt.reach.dim();
  DistanceBracket b{-INFINITY, INFINITY};
  for (int k = 0; k < samples; ++k) {
    const SupportEval e =
        Evaluate(pt, SphereDirection(dim, static_cast<long>(k) + seed,
                                     samples));
    b.lower_bound = std::max(b.lower_bound, e.lower);
    b.upper_bound = std::min(b.upper_bound, e.upper);
  }
  return b;
}

}  // namespace mtpls
