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

// Closed-form price equilibria and the revenues they generate.

#pragma once

#include <optional>

#include "spectrum/market.hpp"

namespace spectrum {

// Equilibrium price path over one phase.
//
// Asymmetric phase: p(t) = exp(-lambda t) +/- offset, offset = eta*u_o/3.
// Symmetric phase:  p(t) = coeff * exp(-lambda t).
class EquilibriumPricePath {
 public:
  static EquilibriumPricePath for_phase(const MarketParams& market,
                                        Phase phase);

  [[nodiscard]] Phase phase() const { return phase_; }
  [[nodiscard]] double coeff_i() const { return coeff_i_; }
  [[nodiscard]] double coeff_j() const { return coeff_j_; }

  // Evaluates on the closure of the phase interval ([0,T1] or [T1,T2]) so the
  // symmetric right limit at T1 is reachable. Throws std::domain_error
  // elsewhere.
  [[nodiscard]] PricePair at(double t) const;

 private:
  EquilibriumPricePath(Phase phase, double coeff_i, double coeff_j,
                       double lambda, double lo, double hi)
      : phase_(phase), coeff_i_(coeff_i), coeff_j_(coeff_j), lambda_(lambda),
        lo_(lo), hi_(hi) {}

  Phase phase_;
  double coeff_i_;  // additive offset (asymmetric) or multiplier (symmetric)
  double coeff_j_;
  double lambda_;
  double lo_;
  double hi_;
};

PricePair eq_prices_asym(const MarketParams& market, double t);
PricePair eq_prices_sym(const MarketParams& market, double t);
// Dispatches on phase_at(t); T1 itself belongs to the asymmetric phase.
PricePair eq_prices(const MarketParams& market, double t);
SharePair eq_shares(const MarketParams& market, double t);

// Shares at the end of the asymmetric phase, the locked-in bases of the
// symmetric phase.
SharePair locked_in_shares(const MarketParams& market);

// Partial derivatives of each operator's instantaneous revenue in its own
// price. They vanish at a Nash equilibrium.
struct FocResiduals {
  double d_i = 0.0;
  double d_j = 0.0;
};
FocResiduals foc_residuals(const MarketParams& market, double t,
                           const PricePair& prices);

struct FallingPriceLevels {
  double phi_i = 0.0;
  double phi_j = 0.0;
};
// Size of each operator's price drop when j catches up at T1.
FallingPriceLevels falling_price_levels(const MarketParams& market);

struct RevenueReport {
  double r_i_asym = 0.0;
  double r_j_asym = 0.0;
  double r_i_sym = 0.0;
  double r_j_sym = 0.0;
  double r_a = 0.0;  // aggregate revenue of the block-A holder (i)
  double r_b = 0.0;  // aggregate revenue of the block-B holder (j)
  double r_gain = 1.0;
};
RevenueReport revenues(const MarketParams& market);

struct DeploymentSlopes {
  double d_ra_dt1 = 0.0;
  double d_rb_dt1 = 0.0;
};
// Central-difference slopes of r_A and r_B in T1. Default step 1e-4 * T1.
// Throws std::domain_error when T1 +/- h leaves the valid parameter region.
DeploymentSlopes deployment_slopes(const MarketParams& market,
                                   std::optional<double> h = std::nullopt);

}  // namespace spectrum
