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

#include "mtpls/harness/grid.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mtpls::harness {

namespace {

std::vector<int> Strided(IndexRange r, int stride) {
  std::vector<int> out;
  for (int i = r.lo; i <= r.hi; i += stride) out.push_back(i);
  return out;
}

void CheckRange(IndexRange r, int lo, int hi, const char* name) {
  if (r.lo < lo || r.hi > hi || r.lo > r.hi) {
    throw std::invalid_argument(std::string("index range out of bounds: ") +
                                name);
  }
}

}  // namespace

void GridSpec::Validate() const {
  if (eps_exponent.lo < 0 || eps_exponent.lo > eps_exponent.hi) {
    throw std::invalid_argument("index range out of bounds: eps_exponent");
  }
  CheckRange(v0, 0, 7, "v0");
  CheckRange(s1, 0, 13, "s1");
  CheckRange(s2, 0, 13, "s2");
  CheckRange(angle, 0, 9, "angle");
  CheckRange(speed, 0, 7, "speed");
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  for (double t : taus) {
    if (!(t > 0.0)) throw std::invalid_argument("taus must be > 0");
  }
}

std::vector<double> GridSpec::Epsilons() const {
  std::vector<double> out;
  for (int i = eps_exponent.lo; i <= eps_exponent.hi; ++i) {
    out.push_back(std::pow(3.0, -i));
  }
  return out;
}

std::vector<RocketScenario> GridSpec::Scenarios() const {
  std::vector<RocketScenario> out;
  for (int iv : Strided(v0, stride)) {
    for (int i1 : Strided(s1, stride)) {
      for (int i2 : Strided(s2, stride)) {
        for (int ia : Strided(angle, stride)) {
          for (int js : Strided(speed, stride)) {
            const double phi = 2.0 * std::numbers::pi * ia / 10.0;
            RocketScenario sc;
            sc.v0 = iv / 8.0;
            sc.s1 = 10.0 * i1 / 13.0 - 5.0;
            sc.s2 = 5.0 * i2 / 13.0;
            sc.v1 = js / 8.0 * std::cos(phi);
            sc.v2 = js / 8.0 * std::sin(phi);
            out.push_back(sc);
          }
        }
      }
    }
  }
  return out;
}

std::string_view Variant::algo_name() const {
  switch (algo) {
    case MinTimeAlgorithm::kNeustadtEaton:
      return "ne";
    case MinTimeAlgorithm::kBarrGilbert:
      return "bg";
    case MinTimeAlgorithm::kSemiAnalytic:
      return "s";
  }
  return "?";
}

std::string_view Variant::da_name() const {
  return da ? DistanceAlgorithmName(*da) : "none";
}

std::string Variant::name() const {
  std::string n(algo_name());
  if (da) n += "+" + std::string(DistanceAlgorithmName(*da));
  return n;
}

std::vector<Variant> AllVariants() {
  std::vector<Variant> out{{MinTimeAlgorithm::kNeustadtEaton, std::nullopt}};
  const DistanceAlgorithm das[] = {
      DistanceAlgorithm::kGjkStar, DistanceAlgorithm::kGilbert,
      DistanceAlgorithm::kSteepestAscent, DistanceAlgorithm::kGradientAscent};
  for (MinTimeAlgorithm a :
       {MinTimeAlgorithm::kBarrGilbert, MinTimeAlgorithm::kSemiAnalytic}) {
    for (DistanceAlgorithm d : das) out.push_back({a, d});
  }
  return out;
}

std::optional<Variant> ParseVariant(std::string_view s) {
  for (const Variant& v : AllVariants()) {
    if (v.name() == s) return v;
  }
  return std::nullopt;
}

std::vector<Variant> ParseVariantList(std::string_view s) {
  std::vector<Variant> out;
  while (!s.empty()) {
    const size_t comma = s.find(',');
    std::string_view item = s.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto v = ParseVariant(item);
      if (!v) {
        throw std::invalid_argument("unknown algorithm: " + std::string(item));
      }
      out.push_back(*v);
    }
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace mtpls::harness
