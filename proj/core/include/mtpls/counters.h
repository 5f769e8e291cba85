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

#ifndef MTPLS_COUNTERS_H_
#define MTPLS_COUNTERS_H_

namespace mtpls {

// Work done by one solver run.
struct RunCounters {
  double i_s = 0.0;  // summed span of contact-function integrations
  double i_f = 0.0;  // summed span of boost integrations
  long n_s = 0;      // contact-function calls
  long n_f = 0;      // boost calls

  RunCounters& operator+=(const RunCounters& o) {
    i_s += o.i_s;
    i_f += o.i_f;
    n_s += o.n_s;
    n_f += o.n_f;
    return *this;
  }
  friend RunCounters operator-(RunCounters a, const RunCounters& b) {
    a.i_s -= b.i_s;
    a.i_f -= b.i_f;
    a.n_s -= b.n_s;
    a.n_f -= b.n_f;
    return a;
  }
  friend bool operator==(const RunCounters&, const RunCounters&) = default;
};

}  // namespace mtpls

#endif  // MTPLS_COUNTERS_H_
