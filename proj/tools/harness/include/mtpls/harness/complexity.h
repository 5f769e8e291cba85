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

#ifndef MTPLS_HARNESS_COMPLEXITY_H_
#define MTPLS_HARNESS_COMPLEXITY_H_

#include "mtpls/counters.h"

namespace mtpls::harness {

// Per-call cost of a closed-form contact evaluation and per-unit-step cost
// of one boost integration step, in seconds.
struct ComplexityWeights {
  double t_an = 422e-9;
  double kappa = 208e-10;
};

// Numeric contact function, numeric boosting: 3 I_s + 2 I_F.
double ComplexityTypeA(const RunCounters& c);
// Closed-form contact function, numeric boosting: t_an N_s + kappa I_F / tau.
double ComplexityTypeB(const RunCounters& c, const ComplexityWeights& w,
                       double tau);
// Both in closed form: N_s + N_F.
double ComplexityTypeC(const RunCounters& c);

}  // namespace mtpls::harness

#endif  // MTPLS_HARNESS_COMPLEXITY_H_
