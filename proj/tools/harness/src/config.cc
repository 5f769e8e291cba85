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

#include "mtpls/harness/config.h"

#include <charconv>
#include <string>

namespace mtpls::harness {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  s = Trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

IndexRange ParseRange(std::string_view s, bool& ok) {
  IndexRange r;
  const size_t colon = s.find(':');
  if (colon == std::string_view::npos) {
    ok = ParseNumber(s, r.lo);
    r.hi = r.lo;
  } else {
    ok = ParseNumber(s.substr(0, colon), r.lo) &&
         ParseNumber(s.substr(colon + 1), r.hi);
  }
  return r;
}

}  // namespace

std::vector<double> ParseDoubleList(std::string_view s) {
  std::vector<double> out;
  while (true) {
    const size_t comma = s.find(',');
    double v = 0.0;
    if (!ParseNumber(s.substr(0, comma), v)) {
      throw ConfigError("bad number list: " + std::string(s));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

BenchConfig ParseConfig(std::string_view text) {
  BenchConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + "expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    bool ok = true;
    auto range = [&](IndexRange& r) { r = ParseRange(value, ok); };
    try {
      if (key == "eps_exponent") {
        range(cfg.grid.eps_exponent);
      } else if (key == "v0") {
        range(cfg.grid.v0);
      } else if (key == "s1") {
        range(cfg.grid.s1);
      } else if (key == "s2") {
        range(cfg.grid.s2);
      } else if (key == "angle") {
        range(cfg.grid.angle);
      } else if (key == "speed") {
        range(cfg.grid.speed);
      } else if (key == "taus") {
        cfg.grid.taus = ParseDoubleList(value);
      } else if (key == "stride") {
        ok = ParseNumber(value, cfg.grid.stride);
      } else if (key == "threads") {
        ok = ParseNumber(value, cfg.options.threads);
      } else if (key == "algos") {
        cfg.variants = ParseVariantList(value);
      } else if (key == "alpha") {
        ok = ParseNumber(value, cfg.options.alpha) && cfg.options.alpha > 0.0;
      } else if (key == "t_an") {
        ok = ParseNumber(value, cfg.options.weights.t_an) &&
             cfg.options.weights.t_an > 0.0;
      } else if (key == "kappa") {
        ok = ParseNumber(value, cfg.options.weights.kappa) &&
             cfg.options.weights.kappa > 0.0;
      } else {
        throw ConfigError(where + "unknown key " + key);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(where + e.what());
    }
    if (!ok) throw ConfigError(where + "bad value for " + key);
  }
  try {
    cfg.grid.Validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

}  // namespace mtpls::harness
