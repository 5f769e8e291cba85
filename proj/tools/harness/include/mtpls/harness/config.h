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

#ifndef MTPLS_HARNESS_CONFIG_H_
#define MTPLS_HARNESS_CONFIG_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mtpls/harness/grid.h"
#include "mtpls/harness/runner.h"

namespace mtpls::harness {

// Contents of a `key = value` config file. Recognized keys:
//   eps_exponent, v0, s1, s2, angle, speed   index ranges "lo:hi" or "i"
//   taus                                    comma-separated list
//   stride, threads                         integers
//   algos                                   comma-separated variant names
//   alpha, t_an, kappa                      reals
// Blank lines and lines starting with '#' are ignored.
struct BenchConfig {
  GridSpec grid;
  std::vector<Variant> variants = AllVariants();
  RunOptions options;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BenchConfig ParseConfig(std::string_view text);
std::vector<double> ParseDoubleList(std::string_view s);

}  // namespace mtpls::harness

#endif  // MTPLS_HARNESS_CONFIG_H_
