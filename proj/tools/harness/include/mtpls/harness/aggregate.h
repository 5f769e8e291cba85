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

#ifndef MTPLS_HARNESS_AGGREGATE_H_
#define MTPLS_HARNESS_AGGREGATE_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "mtpls/harness/runner.h"

namespace mtpls::harness {

struct FailureRate {
  double tau = 0.0;
  double eps = 0.0;
  std::string variant;
  long samples = 0;
  long failures = 0;

  double rate() const {
    return samples == 0 ? 0.0 : static_cast<double>(failures) / samples;
  }
};

// Averages over the samples on which every variant of the (tau, eps) group
// succeeded.
struct ComplexityAverage {
  double tau = 0.0;
  double eps = 0.0;
  std::string variant;
  long samples = 0;
  double cx_a = 0.0;
  double cx_b = 0.0;
  double cx_c = 0.0;
};

// Percentage of common samples on which `row` has a strictly lower Type B
// complexity than `col`.
struct SuperiorityCell {
  double tau = 0.0;
  double eps = 0.0;
  std::string row;
  std::string col;
  long samples = 0;
  double percent = 0.0;
};

struct Aggregates {
  std::vector<std::string> variants;  // first-appearance order
  std::vector<double> taus;           // descending
  std::vector<double> epsilons;       // descending
  std::vector<FailureRate> failure_rates;
  std::vector<ComplexityAverage> complexity;
  std::vector<SuperiorityCell> superiority;

  const FailureRate* FindRate(double tau, double eps,
                              const std::string& v) const;
  const ComplexityAverage* FindComplexity(double tau, double eps,
                                          const std::string& v) const;
};

Aggregates Aggregate(const std::vector<RunRow>& rows);

void WriteFailureRatesCsv(std::ostream& out, const Aggregates& a);
void WriteComplexityCsv(std::ostream& out, const Aggregates& a);
void WriteSuperiorityCsv(std::ostream& out, const Aggregates& a);

}  // namespace mtpls::harness

#endif  // MTPLS_HARNESS_AGGREGATE_H_
