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

#include "spectrum/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace spectrum {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

SweepAxis parse_axis(std::string_view name) {
  name = trim(name);
  if (name == "eta") return SweepAxis::kEta;
  if (name == "t1") return SweepAxis::kT1;
  if (name == "alpha_i") return SweepAxis::kAlphaI;
  if (name == "c_a") return SweepAxis::kCA;
  throw std::invalid_argument("unknown sweep axis '" + std::string(name) +
                              "' (expected eta, t1, alpha_i or c_a)");
}

std::optional<SweepSpec> parse_sweep(std::string_view text) {
  text = trim(text);
  if (text == "none") return std::nullopt;
  std::array<std::string_view, 4> parts;
  std::size_t n = 0;
  while (n < parts.size()) {
    const auto colon = text.find(':');
    parts[n++] = text.substr(0, colon);
    if (colon == std::string_view::npos) {
      text = {};
      break;
    }
    text.remove_prefix(colon + 1);
  }
  if (n != 4 || !text.empty()) {
    throw std::invalid_argument("sweep must be <axis>:<lo>:<hi>:<steps>");
  }
  return SweepSpec{parse_axis(parts[0]), parse_double(parts[1]),
                   parse_double(parts[2]), parse_int(parts[3])};
}

Scenario with(Scenario s, double eta, double t1, std::optional<SweepSpec> sweep) {
  s.eta = eta;
  s.t1 = t1;
  s.sweep = sweep;
  return s;
}

const std::array<Preset, 7>& preset_table() {
  static const std::array<Preset, 7> table = [] {
    const Scenario base;
    Scenario fig6 = with(base, 0.6, 1.0, SweepSpec{SweepAxis::kAlphaI, 0.0, 1.0, 21});
    Scenario fig7 = with(base, 0.6, 1.0, SweepSpec{SweepAxis::kT1, 0.5, 5.0, 10});
    return std::array<Preset, 7>{{
        {"fig3a", "equilibrium prices over time with eta=0.3", with(base, 0.3, 1.0, {})},
        {"fig3b", "equilibrium prices over time with eta=0.6", with(base, 0.6, 1.0, {})},
        {"fig4a", "market shares over time with eta=0.3", with(base, 0.3, 1.0, {})},
        {"fig4b", "market shares over time with eta=0.6", with(base, 0.6, 1.0, {})},
        {"fig5", "revenue gain vs eta at T1=1 (set t1=2 for the second curve)",
         with(base, 0.6, 1.0, SweepSpec{SweepAxis::kEta, 0.05, 0.6, 12})},
        {"fig6", "profit gain vs alpha_i at c_A=2 (set c_a=1 for the second curve)",
         fig6},
        {"fig7", "profit gain vs T1 at alpha_i=0.6 (set alpha_i=0.8 for the second curve)",
         fig7},
    }};
  }();
  return table;
}

}  // namespace

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kEta: return "eta";
    case SweepAxis::kT1: return "t1";
    case SweepAxis::kAlphaI: return "alpha_i";
    case SweepAxis::kCA: return "c_a";
  }
  return "?";
}

double parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw std::invalid_argument("not a finite number: '" + std::string(text) +
                                "'");
  }
  return value;
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  for (int k = 0; k < steps; ++k) {
    // Endpoints are exact.
    out.push_back(k + 1 == steps ? hi : lo + (hi - lo) * k / (steps - 1));
  }
  return out;
}

MarketParams Scenario::market() const { return {u_o, eta, lambda, t1, t2}; }

AuctionParams Scenario::auction() const {
  return {c_a, c_b, c_bs, alpha_i, alpha_j};
}

Scenario Scenario::at_axis(SweepAxis axis, double value) const {
  Scenario s = *this;
  switch (axis) {
    case SweepAxis::kEta: s.eta = value; break;
    case SweepAxis::kT1: s.t1 = value; break;
    case SweepAxis::kAlphaI: s.alpha_i = value; break;
    case SweepAxis::kCA: s.c_a = value; break;
  }
  return s;
}

void Scenario::set(std::string_view key, std::string_view value) {
  key = trim(key);
  if (key == "u_o") u_o = parse_double(value);
  else if (key == "eta") eta = parse_double(value);
  else if (key == "lambda") lambda = parse_double(value);
  else if (key == "t1") t1 = parse_double(value);
  else if (key == "t2") t2 = parse_double(value);
  else if (key == "c_a") c_a = parse_double(value);
  else if (key == "c_b") c_b = parse_double(value);
  else if (key == "c_bs") c_bs = parse_double(value);
  else if (key == "alpha_i") alpha_i = parse_double(value);
  else if (key == "alpha_j") alpha_j = parse_double(value);
  else if (key == "time_samples") time_samples = parse_int(value);
  else if (key == "sweep") sweep = parse_sweep(value);
  else throw std::invalid_argument("unknown scenario key '" + std::string(key) + "'");
}

void Scenario::validate() const {
  (void)market();
  (void)auction();
  if (time_samples < 2) {
    throw std::invalid_argument("time_samples must be >= 2");
  }
  if (!sweep) return;
  if (sweep->steps < 2) throw std::invalid_argument("sweep needs >= 2 steps");
  if (!(sweep->lo < sweep->hi)) {
    throw std::invalid_argument("sweep needs lo < hi");
  }
  const double lo = sweep->lo;
  const double hi = sweep->hi;
  bool ok = true;
  switch (sweep->axis) {
    case SweepAxis::kEta: ok = lo >= 0.0 && hi < 1.0; break;
    case SweepAxis::kT1: ok = lo > 0.0 && hi < t2; break;
    case SweepAxis::kAlphaI: ok = lo >= 0.0 && hi <= 1.0; break;
    case SweepAxis::kCA: ok = lo >= 0.0; break;
  }
  if (!ok) {
    throw std::invalid_argument("sweep bounds outside the domain of " +
                                std::string(axis_name(sweep->axis)));
  }
}

Scenario parse_scenario(std::istream& in, Scenario base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    try {
      base.set(view.substr(0, eq), view.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  return base;
}

void apply_override(Scenario& scenario, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw std::invalid_argument("override must be key=value");
  }
  scenario.set(assignment.substr(0, eq), assignment.substr(eq + 1));
}

std::span<const Preset> presets() { return preset_table(); }

const Preset& find_preset(std::string_view name) {
  for (const Preset& p : preset_table()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace spectrum
