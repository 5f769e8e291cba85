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

#include "mtpls/harness/aggregate.h"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <tuple>

#include "mtpls/harness/results_csv.h"

namespace mtpls::harness {

namespace {

using Group = std::pair<double, double>;  // (tau, eps)
// Scenario fields plus an occurrence index: the grid repeats the scenario
// with zero target speed once per direction, and each repeat is a sample.
using SampleKey = std::tuple<double, double, double, double, double, int>;

template <typename T>
void PushUnique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

const FailureRate* Aggregates::FindRate(double tau, double eps,
                                        const std::string& v) const {
  for (const FailureRate& r : failure_rates) {
    if (r.tau == tau && r.eps == eps && r.variant == v) return &r;
  }
  return nullptr;
}

const ComplexityAverage* Aggregates::FindComplexity(
    double tau, double eps, const std::string& v) const {
  for (const ComplexityAverage& c : complexity) {
    if (c.tau == tau && c.eps == eps && c.variant == v) return &c;
  }
  return nullptr;
}

Aggregates Aggregate(const std::vector<RunRow>& rows) {
  Aggregates a;
  // (tau, eps) -> sample -> variant -> row
  std::map<Group, std::map<SampleKey, std::map<std::string, const RunRow*>>,
           std::greater<>>
      groups;
  std::map<std::tuple<double, double, std::string, double, double, double,
                      double, double>,
           int>
      seen;
  for (const RunRow& r : rows) {
    const std::string v = r.variant();
    PushUnique(a.variants, v);
    PushUnique(a.taus, r.tau);
    PushUnique(a.epsilons, r.eps);
    const RocketScenario& sc = r.scenario;
    const int occurrence =
        seen[{r.tau, r.eps, v, sc.v0, sc.s1, sc.s2, sc.v1, sc.v2}]++;
    groups[{r.tau, r.eps}][{sc.v0, sc.s1, sc.s2, sc.v1, sc.v2, occurrence}]
          [v] = &r;
  }
  std::sort(a.taus.begin(), a.taus.end(), std::greater<>());
  std::sort(a.epsilons.begin(), a.epsilons.end(), std::greater<>());

  for (const auto& [group, samples] : groups) {
    const auto [tau, eps] = group;
    std::map<std::string, FailureRate> rates;
    std::map<std::string, ComplexityAverage> sums;
    std::vector<const std::map<std::string, const RunRow*>*> common;
    for (const auto& [key, by_variant] : samples) {
      bool all_ok = by_variant.size() == a.variants.size();
      for (const auto& [v, row] : by_variant) {
        FailureRate& fr = rates[v];
        ++fr.samples;
        if (!row->succeeded()) {
          ++fr.failures;
          all_ok = false;
        }
      }
      if (!all_ok) continue;
      common.push_back(&by_variant);
      for (const auto& [v, row] : by_variant) {
        ComplexityAverage& c = sums[v];
        ++c.samples;
        c.cx_a += row->cx_a;
        c.cx_b += row->cx_b;
        c.cx_c += row->cx_c;
      }
    }
    for (const std::string& v : a.variants) {
      if (!rates.contains(v)) continue;
      FailureRate fr = rates[v];
      fr.tau = tau;
      fr.eps = eps;
      fr.variant = v;
      a.failure_rates.push_back(fr);
      ComplexityAverage c = sums[v];
      c.tau = tau;
      c.eps = eps;
      c.variant = v;
      if (c.samples > 0) {
        c.cx_a /= c.samples;
        c.cx_b /= c.samples;
        c.cx_c /= c.samples;
      }
      a.complexity.push_back(c);
    }
    for (const std::string& row : a.variants) {
      for (const std::string& col : a.variants) {
        if (!rates.contains(row) || !rates.contains(col)) continue;
        SuperiorityCell cell{tau, eps, row, col,
                             static_cast<long>(common.size()), 0.0};
        long wins = 0;
        for (const auto* by_variant : common) {
          if (by_variant->at(row)->cx_b < by_variant->at(col)->cx_b) ++wins;
        }
        if (!common.empty()) {
          cell.percent = 100.0 * static_cast<double>(wins) /
                         static_cast<double>(common.size());
        }
        a.superiority.push_back(cell);
      }
    }
  }
  return a;
}

void WriteFailureRatesCsv(std::ostream& out, const Aggregates& a) {
  out << "tau,eps,variant,samples,failures,rate\n";
  for (const FailureRate& r : a.failure_rates) {
    out << FormatDouble(r.tau) << ',' << FormatDouble(r.eps) << ','
        << r.variant << ',' << r.samples << ',' << r.failures << ','
        << FormatDouble(r.rate()) << '\n';
  }
}

void WriteComplexityCsv(std::ostream& out, const Aggregates& a) {
  out << "tau,eps,variant,samples,cx_a,cx_b,cx_c\n";
  for (const ComplexityAverage& c : a.complexity) {
    out << FormatDouble(c.tau) << ',' << FormatDouble(c.eps) << ','
        << c.variant << ',' << c.samples << ',' << FormatDouble(c.cx_a) << ','
        << FormatDouble(c.cx_b) << ',' << FormatDouble(c.cx_c) << '\n';
  }
}

void WriteSuperiorityCsv(std::ostream& out, const Aggregates& a) {
  out << "tau,eps,row,col,samples,percent\n";
  for (const SuperiorityCell& c : a.superiority) {
    out << FormatDouble(c.tau) << ',' << FormatDouble(c.eps) << ',' << c.row
        << ',' << c.col << ',' << c.samples << ','
        << FormatDouble(c.percent) << '\n';
  }
}

}  // namespace mtpls::harness
