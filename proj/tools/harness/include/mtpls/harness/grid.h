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

#ifndef MTPLS_HARNESS_GRID_H_
#define MTPLS_HARNESS_GRID_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtpls/distance_algorithms.h"
#include "mtpls/isotropic_rocket.h"
#include "mtpls/min_time.h"

namespace mtpls::harness {

// An inclusive index range lo..hi.
struct IndexRange {
  int lo = 0;
  int hi = 0;
};

// The benchmark parameter grid, as index ranges over the axes
//   eps = 3^-i, v0 = i/8, s1 = 10i/13 - 5, s2 = 5i/13,
//   target velocity = (j/8) (cos 2 pi i/10, sin 2 pi i/10).
// `stride` thins the five scenario axes.
struct GridSpec {
  IndexRange eps_exponent{3, 11};
  IndexRange v0{0, 7};
  IndexRange s1{0, 13};
  IndexRange s2{0, 13};
  IndexRange angle{0, 9};
  IndexRange speed{0, 4};
  std::vector<double> taus{1e-2, 1e-3, 1e-4};
  int stride = 1;

  void Validate() const;
  std::vector<double> Epsilons() const;
  // Enumeration order: v0, s1, s2, angle, speed (last varies fastest).
  std::vector<RocketScenario> Scenarios() const;
};

struct Variant {
  MinTimeAlgorithm algo = MinTimeAlgorithm::kSemiAnalytic;
  std::optional<DistanceAlgorithm> da;  // unset for Neustadt-Eaton

  std::string name() const;     // "ne", "bg+sa", ...
  std::string_view algo_name() const;  // "ne", "bg", "s"
  std::string_view da_name() const;    // "none", "gjk", "g", "sa", "ga"
  bool uses_boost() const { return algo != MinTimeAlgorithm::kSemiAnalytic; }
  friend bool operator==(const Variant&, const Variant&) = default;
};

// NE, BG with each distance algorithm, then S with each.
std::vector<Variant> AllVariants();
std::optional<Variant> ParseVariant(std::string_view s);
// Comma-separated list. Throws std::invalid_argument naming a bad entry.
std::vector<Variant> ParseVariantList(std::string_view s);

}  // namespace mtpls::harness

#endif  // MTPLS_HARNESS_GRID_H_
