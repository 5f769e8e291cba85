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

#ifndef MTPLS_HARNESS_RESULTS_CSV_H_
#define MTPLS_HARNESS_RESULTS_CSV_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtpls/harness/runner.h"

namespace mtpls::harness {

inline constexpr char kCsvHeader[] =
    "eps,tau,v0,s1,s2,v1,v2,algo,da,status,fail_code,t_star,i_s,i_f,n_s,n_f,"
    "cx_a,cx_b,cx_c";

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Doubles with 17 significant digits.
std::string FormatDouble(double x);

void WriteRunsCsv(std::ostream& out, const std::vector<RunRow>& rows);

// Throws CsvError with the 1-based line number of a malformed row, or the
// name of a missing column.
std::vector<RunRow> ReadRunsCsv(std::istream& in);

}  // namespace mtpls::harness

#endif  // MTPLS_HARNESS_RESULTS_CSV_H_
