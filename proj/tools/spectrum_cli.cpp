// Copyright 2026 The Spectrum Duopoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// spectrum_cli: equilibrium series, parameter sweeps, auction reports and
// oracle validation for the two-operator spectrum game.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 validation
// failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectrum/commands.hpp"
#include "spectrum/scenario.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kValidationFailure = 2;

struct Options {
  std::string scenario_path;
  std::string preset;
  std::string out = "stdout";
  std::vector<std::string> overrides;
  std::uint64_t seed = spectrum::McConfig{}.seed;
  std::int64_t mc_users = spectrum::McConfig{}.n_users;
  double grid_step = 1e-5;
  bool quiet = false;
};

// Preset first, then the scenario file, then --set overrides.
spectrum::Scenario load_scenario(const Options& opts) {
  spectrum::Scenario scenario;
  if (!opts.preset.empty()) scenario = spectrum::find_preset(opts.preset).scenario;
  if (!opts.scenario_path.empty()) {
    std::ifstream in(opts.scenario_path);
    if (!in) throw std::invalid_argument("cannot open " + opts.scenario_path);
    scenario = spectrum::parse_scenario(in, scenario);
  }
  for (const std::string& assignment : opts.overrides) {
    spectrum::apply_override(scenario, assignment);
  }
  return scenario;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of the two-operator spectrum auction and pricing game"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--scenario", opts.scenario_path, "key = value scenario file");
  app.add_option("--preset", opts.preset, "built-in scenario (see `preset`)");
  app.add_option("--out", opts.out, "output path or stdout");
  app.add_option("--set", opts.overrides, "override a scenario key (key=value)");
  app.add_option("--seed", opts.seed, "Monte Carlo seed");
  app.add_option("--mc-users", opts.mc_users, "Monte Carlo population size")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid-step", opts.grid_step, "best-response price grid step")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", opts.quiet, "suppress human-readable output");

  auto* series = app.add_subcommand("series", "equilibrium prices and shares over time");
  auto* sweep = app.add_subcommand("sweep", "revenue and profit gains along a sweep axis");
  auto* auction = app.add_subcommand("auction", "optimal bids, profits and policy levers");
  auto* validate = app.add_subcommand("validate", "check closed forms against oracles");
  auto* preset = app.add_subcommand("preset", "list built-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (opts.out != "stdout" && opts.out != "-") {
    file.open(opts.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << opts.out << '\n';
      return kUsageError;
    }
    out = &file;
  }

  try {
    if (preset->parsed()) {
      spectrum::write_presets(*out);
      return 0;
    }
    const spectrum::Scenario scenario = load_scenario(opts);
    if (series->parsed()) {
      spectrum::write_series(scenario, *out);
    } else if (sweep->parsed()) {
      const int invalid = spectrum::write_sweep(scenario, *out);
      if (invalid > 0 && !opts.quiet) {
        std::cerr << invalid << " sweep point(s) marked invalid\n";
      }
    } else if (auction->parsed()) {
      spectrum::write_auction_report(scenario, *out, opts.quiet);
    } else if (validate->parsed()) {
      const spectrum::ValidationReport report = spectrum::run_validation(
          scenario, spectrum::McConfig{opts.mc_users, opts.seed}, opts.grid_step);
      spectrum::write_validation(report, *out);
      if (!report.all_passed()) {
        std::cerr << "validation failed:\n";
        for (const auto& c : report.checks) {
          if (!c.passed) std::cerr << "  " << c.name << '\n';
        }
        return kValidationFailure;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  out->flush();
  return 0;
}
