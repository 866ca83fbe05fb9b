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

// First-price sealed-bid competition for block A between two spiteful
// operators. The loser leases block B at its reserve price and pays the
// catch-up investment.

#pragma once

#include <optional>

#include "spectrum/market.hpp"
#include "spectrum/pricing.hpp"

namespace spectrum {

// Throws std::invalid_argument on negative or non-finite costs, or spite
// coefficients outside [0, 1].
class AuctionParams {
 public:
  AuctionParams(double c_a, double c_b, double c_bs, double alpha_i,
                double alpha_j);

  [[nodiscard]] double c_a() const { return c_a_; }
  [[nodiscard]] double c_b() const { return c_b_; }
  [[nodiscard]] double c_bs() const { return c_bs_; }
  [[nodiscard]] double alpha_i() const { return alpha_i_; }
  [[nodiscard]] double alpha_j() const { return alpha_j_; }
  [[nodiscard]] double alpha(Mno who) const {
    return who == Mno::kI ? alpha_i_ : alpha_j_;
  }

  [[nodiscard]] AuctionParams with_c_a(double c_a) const;
  [[nodiscard]] AuctionParams with_alpha_i(double alpha_i) const;

  friend bool operator==(const AuctionParams&, const AuctionParams&) = default;

 private:
  double c_a_;
  double c_b_;
  double c_bs_;
  double alpha_i_;
  double alpha_j_;
};

struct AuctionOutcome {
  double b_i = 0.0;
  double b_j = 0.0;
  Mno winner = Mno::kI;
  double pi_i = 0.0;
  double pi_j = 0.0;
  // pi_i / pi_j; empty when pi_j == 0.
  std::optional<double> rho_gain;
  // Winner profit as (r_A - (1 - alpha) pi_B + c_A) / (2 + alpha). Differs
  // from r_A - b* whenever pi_B or c_A is nonzero; kept for diagnostics only.
  double winner_profit_printed_form = 0.0;
};

// Block valuations plus the auction parameters. r_A, r_B and pi_B are
// computed once at construction.
class SpectrumAuction {
 public:
  SpectrumAuction(const MarketParams& market, const AuctionParams& auction);

  [[nodiscard]] const MarketParams& market() const { return market_; }
  [[nodiscard]] const AuctionParams& params() const { return auction_; }
  [[nodiscard]] const RevenueReport& revenue() const { return revenue_; }
  [[nodiscard]] double r_a() const { return revenue_.r_a; }
  [[nodiscard]] double r_b() const { return revenue_.r_b; }
  // Profit of leasing block B: r_B - c_B - c_BS.
  [[nodiscard]] double pi_b() const { return pi_b_; }

  // Realized objective of `who` for a bid pair. Ties go to i.
  [[nodiscard]] double spiteful_objective(Mno who, double b_i,
                                          double b_j) const;

  // Expected objective of `who` bidding `bid` against a rival bid uniform on
  // [c_A, r_A], left unnormalized by the support width (the argmax does not
  // depend on it). Throws std::invalid_argument if c_A >= r_A.
  [[nodiscard]] double expected_objective(Mno who, double bid) const;

  [[nodiscard]] double optimal_bid(Mno who) const;
  [[nodiscard]] double optimal_bid_for_alpha(double alpha) const;

  [[nodiscard]] AuctionOutcome settle() const;

  // pi_i / pi_B when i wins with spite alpha; empty when pi_B == 0.
  [[nodiscard]] std::optional<double> winner_profit_gain(double alpha) const;

  // Spite coefficient at which the block-A winner's profit equals pi_B.
  // Empty when the gain does not cross 1 on [0, 1].
  [[nodiscard]] std::optional<double> crossover_alpha() const;
  // Closed-form rearrangement (r_A - c_A - pi_B) / (2 pi_B), unclipped.
  [[nodiscard]] double crossover_alpha_closed_form() const;

  // Reserve price of block A in [c_B, r_A) that equalizes profits at the
  // given spite coefficient. Empty when no such price exists; a root within
  // rounding (1e-9) below c_B is reported as c_B.
  [[nodiscard]] std::optional<double> fair_reserve(double alpha) const;

 private:
  void require_nondegenerate() const;
  [[nodiscard]] double bid_formula(double alpha, double c_a) const;

  MarketParams market_;
  AuctionParams auction_;
  RevenueReport revenue_;
  double pi_b_;
};

}  // namespace spectrum
