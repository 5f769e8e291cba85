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

#include "mtpls/harness/complexity.h"

namespace mtpls::harness {

double ComplexityTypeA(const RunCounters& c) { return 3.0 * c.i_s + 2.0 * c.i_f; }

double ComplexityTypeB(const RunCounters& c, const ComplexityWeights& w,
                       double tau) {
  const double boost = c.i_f == 0.0 ? 0.0 : w.kappa * c.i_f / tau;
  return w.t_an * static_cast<double>(c.n_s) + boost;
}

double ComplexityTypeC(const RunCounters& c) {
  return static_cast<double>(c.n_s + c.n_f);
}

}  // namespace mtpls::harness
