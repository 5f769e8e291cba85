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

// bench: runs the rocket benchmark grid and plots its results.
//
//   bench run --config <file> --out <dir> [--stride k] [--algos a,b]
//             [--taus t1,t2]
//   bench plot --csv <file> --out <dir>
//
// Exit codes: 0 success, 2 I/O error, 3 configuration error.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mtpls/harness/aggregate.h"
#include "mtpls/harness/config.h"
#include "mtpls/harness/plots.h"
#include "mtpls/harness/results_csv.h"
#include "mtpls/harness/runner.h"

namespace fs = std::filesystem;
using namespace mtpls::harness;

namespace {

constexpr int kIoError = 2;
constexpr int kConfigError = 3;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename Fn>
void WriteWith(const fs::path& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot write " + path.string());
  fn(out);
  out.flush();
  if (!out) throw IoFailure("write failed: " + path.string());
}

int Run(const fs::path& config_path, const fs::path& out_dir, int stride,
        const std::string& algos, const std::string& taus) {
  BenchConfig cfg;
  try {
    cfg = ParseConfig(ReadText(config_path));
    if (stride > 0) cfg.grid.stride = stride;
    if (!algos.empty()) cfg.variants = ParseVariantList(algos);
    if (!taus.empty()) cfg.grid.taus = ParseDoubleList(taus);
    cfg.grid.Validate();
  } catch (const IoFailure&) {
    throw;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoFailure("cannot create " + out_dir.string());

  const auto start = std::chrono::steady_clock::now();
  const std::vector<RunRow> rows = RunGrid(cfg.grid, cfg.variants, cfg.options);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  const Aggregates agg = Aggregate(rows);
  WriteWith(out_dir / "runs.csv", [&](std::ostream& o) { WriteRunsCsv(o, rows); });
  WriteWith(out_dir / "failure_rates.csv",
            [&](std::ostream& o) { WriteFailureRatesCsv(o, agg); });
  WriteWith(out_dir / "complexity.csv",
            [&](std::ostream& o) { WriteComplexityCsv(o, agg); });
  WriteWith(out_dir / "superiority.csv",
            [&](std::ostream& o) { WriteSuperiorityCsv(o, agg); });
  std::cerr << rows.size() << " rows in " << secs << " s -> "
            << (out_dir / "runs.csv").string() << '\n';
  return 0;
}

int Plot(const fs::path& csv, const fs::path& out_dir) {
  for (const fs::path& p : EmitPlots(csv, out_dir)) {
    std::cout << p.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-time benchmark on the isotropic rocket"};
  app.require_subcommand(1);

  std::string config, out, algos, taus, csv, plot_out;
  int stride = 0;
  CLI::App* run = app.add_subcommand("run", "Run the parameter grid");
  run->add_option("--config", config, "key = value grid description")
      ->required();
  run->add_option("--out", out, "output directory")->required();
  run->add_option("--stride", stride, "subsampling stride per axis")
      ->check(CLI::PositiveNumber);
  run->add_option("--algos", algos, "comma-separated variants, e.g. ne,bg+sa");
  run->add_option("--taus", taus, "comma-separated RK4 steps");

  CLI::App* plot = app.add_subcommand("plot", "Render SVG plots from a CSV");
  plot->add_option("--csv", csv, "runs.csv from `bench run`")->required();
  plot->add_option("--out", plot_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (run->parsed()) return Run(config, out, stride, algos, taus);
    return Plot(csv, plot_out);
  } catch (const CsvError& e) {
    std::cerr << "csv error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  }
}
