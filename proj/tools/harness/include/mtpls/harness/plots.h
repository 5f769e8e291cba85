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

#ifndef MTPLS_HARNESS_PLOTS_H_
#define MTPLS_HARNESS_PLOTS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "mtpls/harness/aggregate.h"

namespace mtpls::harness {

// Writes, per tau, a failure-rate plot, one complexity plot per type and a
// superiority heatmap. Returns the written paths.
std::vector<std::filesystem::path> EmitPlots(const Aggregates& a,
                                             const std::filesystem::path& dir);

// Reads a runs CSV and plots it.
std::vector<std::filesystem::path> EmitPlots(
    const std::filesystem::path& csv, const std::filesystem::path& dir);

}  // namespace mtpls::harness

#endif  // MTPLS_HARNESS_PLOTS_H_
