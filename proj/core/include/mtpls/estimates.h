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

#ifndef MTPLS_ESTIMATES_H_
#define MTPLS_ESTIMATES_H_

#include "mtpls/geometry.h"
#include "mtpls/types.h"

namespace mtpls {

// The reachable set and the target frozen at one instant.
struct ProblemAtTime {
  const ConvexBody& reach;
  const ConvexBody& target;
};

struct EstimatePair {
  double lower = 0.0;
  double upper = 0.0;
  double delta = 0.0;
};

// Both contact points for a support vector p, with the derived estimates.
struct SupportEval {
  Covec p;
  StateVec reach;   // s_R(p)
  StateVec target;  // s_G(-p)
  double lower = 0.0;
  double upper = 0.0;

  double delta() const { return upper - lower; }
  StateVec chord() const { return target - reach; }
  EstimatePair estimates() const { return {lower, upper, upper - lower}; }
};

// One contact evaluation of each body.
SupportEval Evaluate(const ProblemAtTime& pt, const Covec& p);

double RhoLower(const ProblemAtTime& pt, const Covec& p);
double RhoUpper(const ProblemAtTime& pt, const Covec& p);
EstimatePair Estimates(const ProblemAtTime& pt, const Covec& p);

// q = chord^T / |chord| - p. Throws when the contact points coincide.
Covec AscentDirection(const ProblemAtTime& pt, const Covec& p);
Covec AscentDirection(const SupportEval& at_p);

// d rho_lower / d p at p.
Covec RhoLowerGradient(const SupportEval& at_p);

// xi'(gamma) = q * (s_G(-(p + gamma q)) - s_R(p + gamma q)) with q the ascent
// direction at p; p is normalized first. The inclined vector is not.
double XiPrime(const ProblemAtTime& pt, const Covec& p, double gamma);
// Same, reusing q. When `inclined` is set it receives the evaluation at
// p + gamma q.
double XiPrime(const ProblemAtTime& pt, const Covec& p, const Covec& q,
               double gamma, SupportEval* inclined = nullptr);

// Smallest N >= 1 with xi'(gamma / 2^(N-1)) >= 0.
int StepExponent(const ProblemAtTime& pt, const Covec& p, double gamma,
                 int max_halvings = 200);

// T + lower / (vR + vG) when lower >= 0, else T.
Time SimpleBoost(Time t, double lower, double v_reach, double v_target);

struct DistanceBracket {
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

// Max of rho_lower and min of rho_upper over `samples` deterministic
// directions on the unit sphere. `seed` offsets the direction sequence.
DistanceBracket BruteForceDistance(const ProblemAtTime& pt, int samples,
                                   unsigned seed = 0);

// The k-th direction of the deterministic sequence used above.
Covec SphereDirection(int dim, long k, int total);

}  // namespace mtpls

#endif  // MTPLS_ESTIMATES_H_
