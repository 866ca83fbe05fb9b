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

// Scenario description shared by every CLI subcommand.
//
// Scenario files are plain text, one `key = value` per line; `#` starts a
// comment. Recognized keys:
//
//   u_o, eta, lambda, t1, t2          market parameters
//   c_a, c_b, c_bs, alpha_i, alpha_j  auction parameters
//   time_samples                      uniform samples on [0, T2] (>= 2)
//   sweep                             <axis>:<lo>:<hi>:<steps> or `none`,
//                                     axis one of eta, t1, alpha_i, c_a
//
// Unset keys keep their defaults (u_o=1, eta=0.6, lambda=0.01, T1=1, T2=10,
// c_A=2, c_B=1, c_BS=1, alpha_i=0.6, alpha_j=0, 1000 samples, no sweep).

#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectrum/auction.hpp"
#include "spectrum/market.hpp"

namespace spectrum {

enum class SweepAxis { kEta, kT1, kAlphaI, kCA };

std::string_view axis_name(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kEta;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;

  // `steps` evenly spaced values from lo to hi inclusive.
  [[nodiscard]] std::vector<double> values() const;
};

struct Scenario {
  double u_o = 1.0;
  double eta = 0.6;
  double lambda = 0.01;
  double t1 = 1.0;
  double t2 = 10.0;
  double c_a = 2.0;
  double c_b = 1.0;
  double c_bs = 1.0;
  double alpha_i = 0.6;
  double alpha_j = 0.0;
  int time_samples = 1000;
  std::optional<SweepSpec> sweep;

  // Both throw std::invalid_argument on invalid values.
  [[nodiscard]] MarketParams market() const;
  [[nodiscard]] AuctionParams auction() const;

  // Returns a copy with the sweep axis set to `value`.
  [[nodiscard]] Scenario at_axis(SweepAxis axis, double value) const;

  // Assigns one key. Throws std::invalid_argument on unknown keys or
  // unparsable values.
  void set(std::string_view key, std::string_view value);

  // Checks market, auction, sample count and sweep bounds. Sweep bounds are
  // checked against the domain of the swept variable only; individual points
  // may still violate cross-parameter constraints and are reported per row.
  void validate() const;
};

// Parses a scenario file on top of `base`.
Scenario parse_scenario(std::istream& in, Scenario base = {});

// Applies `key=value`.
void apply_override(Scenario& scenario, std::string_view assignment);

struct Preset {
  std::string_view name;
  std::string_view description;
  Scenario scenario;
};

std::span<const Preset> presets();
// Throws std::invalid_argument for unknown names.
const Preset& find_preset(std::string_view name);

// Locale-independent double parsing; throws std::invalid_argument.
double parse_double(std::string_view text);

}  // namespace spectrum
