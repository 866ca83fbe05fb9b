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

// Subcommand bodies. Each writes to a stream so output can be captured and
// compared byte for byte.
//
// CSV conventions: comma separated, header row first, '\n' record
// terminator, numbers in fixed notation with 12 decimals.

#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "spectrum/auction.hpp"
#include "spectrum/oracles.hpp"
#include "spectrum/pricing.hpp"
#include "spectrum/scenario.hpp"

namespace spectrum {

std::string format_number(double value);

// Columns: t,p_i,p_j,q_i,q_j,phase. A duplicate row at T1 carries the
// symmetric right limit.
void write_series(const Scenario& scenario, std::ostream& out);

// Columns: <axis>,r_a,r_b,r_gain,b_i_star,pi_i,pi_j,rho_gain,status.
// Infeasible points get empty numeric cells and status `invalid:<reason>`.
// Returns the number of invalid rows.
int write_sweep(const Scenario& scenario, std::ostream& out);

// Human-readable block (unless quiet), then a CSV header and one row.
void write_auction_report(const Scenario& scenario, std::ostream& out,
                          bool quiet);

// Closed forms under validation. Replaceable so that tests can check that a
// corrupted formula is caught.
struct ClosedForms {
  std::function<PricePair(const MarketParams&, double)> prices;
  std::function<SharePair(const MarketParams&, double)> shares;
  std::function<RevenueReport(const MarketParams&)> revenue;
  std::function<FallingPriceLevels(const MarketParams&)> drops;
  std::function<double(const SpectrumAuction&, Mno)> bid;

  static ClosedForms standard();
};

struct ValidationCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  [[nodiscard]] bool all_passed() const;
};

ValidationReport run_validation(const Scenario& scenario, const McConfig& mc,
                                double grid_step,
                                const ClosedForms& forms = ClosedForms::standard());

void write_validation(const ValidationReport& report, std::ostream& out);

void write_presets(std::ostream& out);

}  // namespace spectrum
