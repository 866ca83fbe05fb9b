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

// Independent numerical checks for the closed forms.
//
// None of these routines call the closed-form equilibrium they are meant to
// verify:
//  * best_response / nash_by_iteration search price grids using only the
//    churn model in market.hpp;
//  * mc_shares simulates individual users against the switching rule;
//  * quad_revenue integrates price x churn-model share numerically;
//  * grid_optimal_bid scans the expected spiteful objective.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "spectrum/auction.hpp"
#include "spectrum/market.hpp"

namespace spectrum {

// Raised when an oracle cannot produce an answer (non-convergence, quadrature
// error estimate too large). Callers treat it as a failed check.
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  double step = 1e-5;
  int max_iters = 10'000;
  double tol = 1e-5;

  // Throws std::invalid_argument unless lo < hi, step > 0 and tol > 0.
  void validate() const;
  [[nodiscard]] std::int64_t last_index() const;
  [[nodiscard]] double point(std::int64_t k) const { return lo + step * k; }

  // [0, 2 exp(-lambda t) + eta u_o]; tol defaults to the step.
  static GridSpec prices(const MarketParams& market, double t,
                         double step = 1e-5);
  // [c_A, r_A].
  static GridSpec bids(const SpectrumAuction& auction, double step = 1e-4);
};

struct McConfig {
  std::int64_t n_users = 1'000'000;
  std::uint64_t seed = 20140101;
};

// Argmax over the grid of own price x own share, opponent price fixed. In the
// symmetric phase `locked_in` is the share split at T1.
double best_response(Phase phase, const MarketParams& market, double t,
                     double opponent_price, Mno who, const GridSpec& grid,
                     const SharePair& locked_in = kInitialShares);

struct NashSolution {
  PricePair prices;
  int iterations = 0;
  SharePair locked_in;  // symmetric phase only
};

// Alternating (Gauss-Seidel) best responses until neither price moves more
// than grid.tol. Throws OracleFailure after grid.max_iters rounds. In the
// symmetric phase, when `locked_in` is not supplied it is obtained by running
// this oracle for the asymmetric phase at T1.
NashSolution nash_by_iteration(Phase phase, const MarketParams& market,
                               double t, const GridSpec& grid,
                               std::optional<PricePair> start = std::nullopt,
                               std::optional<SharePair> locked_in = std::nullopt);

// Share split at T1 produced by the oracle equilibrium of the asymmetric
// phase.
SharePair oracle_locked_in_shares(const MarketParams& market, double step);

// Simulates n_users individuals. Half start at each operator. In the
// asymmetric phase every user draws a switching cost s uniform on
// [0, exp(-lambda t)] and leaves its operator iff
// u_from - p_from <= u_to - p_to - s.
// For t > T1 the population is first churned at T1 under `boundary_prices`,
// then each user of the dearer operator draws a fresh cost and leaves iff the
// price gap covers it.
//
// Chunk k of 65536 users draws from its own mt19937_64 stream seeded with
// splitmix64(seed + k), so results are identical across platforms and chunk
// schedules.
SharePair mc_shares(const MarketParams& market, double t,
                    const PricePair& prices, const McConfig& mc,
                    std::optional<PricePair> boundary_prices = std::nullopt);

struct RevenuePair {
  double r_i = 0.0;
  double r_j = 0.0;
};

// Adaptive Gauss-Kronrod integral of p*(t) Q(t) over the phase, with Q taken
// from the churn model at the equilibrium prices. Absolute error <= 1e-10.
RevenuePair quad_revenue(Phase phase, const MarketParams& market);

// Argmax of the expected spiteful objective over the grid.
double grid_optimal_bid(const SpectrumAuction& auction, Mno who,
                        const GridSpec& grid);

// (fn(at + h) - fn(at - h)) / (2h). A std::invalid_argument thrown by fn at
// the shifted points is reported as std::domain_error.
double finite_diff(const std::function<double(double)>& fn, double at,
                   double h);

}  // namespace spectrum
