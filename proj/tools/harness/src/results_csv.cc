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

#include "mtpls/harness/results_csv.h"

#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <type_traits>
#include <unordered_map>

namespace mtpls::harness {

std::string FormatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void WriteRunsCsv(std::ostream& out, const std::vector<RunRow>& rows) {
  out << kCsvHeader << '\n';
  for (const RunRow& r : rows) {
    out << FormatDouble(r.eps) << ',' << FormatDouble(r.tau) << ','
        << FormatDouble(r.scenario.v0) << ',' << FormatDouble(r.scenario.s1)
        << ',' << FormatDouble(r.scenario.s2) << ','
        << FormatDouble(r.scenario.v1) << ',' << FormatDouble(r.scenario.v2)
        << ',' << r.algo << ',' << r.da << ',' << r.status << ','
        << r.fail_code << ',' << FormatDouble(r.t_star) << ','
        << FormatDouble(r.counters.i_s) << ',' << FormatDouble(r.counters.i_f)
        << ',' << r.counters.n_s << ',' << r.counters.n_f << ','
        << FormatDouble(r.cx_a) << ',' << FormatDouble(r.cx_b) << ','
        << FormatDouble(r.cx_c) << '\n';
  }
}

namespace {

std::vector<std::string_view> Split(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const size_t comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T Parse(std::string_view s, long line, std::string_view column) {
  T value{};
  std::string_view t = s;
  if constexpr (std::is_floating_point_v<T>) {
    if (t == "nan" || t == "-nan") return std::numeric_limits<T>::quiet_NaN();
    if (t == "inf") return std::numeric_limits<T>::infinity();
  }
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw CsvError("line " + std::to_string(line) + ": bad value in column " +
                   std::string(column));
  }
  return value;
}

}  // namespace

std::vector<RunRow> ReadRunsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CsvError("line 1: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::unordered_map<std::string, size_t> col;
  const std::vector<std::string_view> header = Split(line);
  for (size_t i = 0; i < header.size(); ++i) col[std::string(header[i])] = i;
  const std::vector<std::string_view> expected = Split(kCsvHeader);
  for (std::string_view name : expected) {
    if (!col.contains(std::string(name))) {
      throw CsvError("missing column: " + std::string(name));
    }
  }

  std::vector<RunRow> rows;
  long number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string_view> f = Split(line);
    if (f.size() != header.size()) {
      throw CsvError("line " + std::to_string(number) + ": expected " +
                     std::to_string(header.size()) + " fields, got " +
                     std::to_string(f.size()));
    }
    auto get = [&](const char* name) { return f[col.at(name)]; };
    auto num = [&](const char* name) {
      return Parse<double>(get(name), number, name);
    };
    RunRow r;
    r.eps = num("eps");
    r.tau = num("tau");
    r.scenario.v0 = num("v0");
    r.scenario.s1 = num("s1");
    r.scenario.s2 = num("s2");
    r.scenario.v1 = num("v1");
    r.scenario.v2 = num("v2");
    r.algo = get("algo");
    r.da = get("da");
    r.status = get("status");
    r.fail_code = Parse<int>(get("fail_code"), number, "fail_code");
    r.t_star = num("t_star");
    r.counters.i_s = num("i_s");
    r.counters.i_f = num("i_f");
    r.counters.n_s = Parse<long>(get("n_s"), number, "n_s");
    r.counters.n_f = Parse<long>(get("n_f"), number, "n_f");
    r.cx_a = num("cx_a");
    r.cx_b = num("cx_b");
    r.cx_c = num("cx_c");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace mtpls::harness
