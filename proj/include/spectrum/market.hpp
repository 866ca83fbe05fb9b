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

// Market primitives and the user-response (churn) model.
//
// Two operators compete for a unit mass of users. Operator i holds the
// high-valued block and offers double-speed service from t = 0; operator j
// catches up at the deployment time T1. Users in the trailing operator face
// switching costs uniform on [0, exp(-lambda t)]. Everything here is valid
// for arbitrary prices, not only the equilibrium ones.

#pragma once

#include <string_view>

namespace spectrum {

enum class Phase { kAsymmetric, kSymmetric };

enum class Mno { kI, kJ };

std::string_view phase_name(Phase phase);
std::string_view mno_name(Mno who);

// Validated market parameters. Construction throws std::invalid_argument if
// any invariant fails, including eta * u_o < exp(-lambda * T1), which keeps
// the asymmetric phase away from total churn.
class MarketParams {
 public:
  MarketParams(double u_o, double eta, double lambda, double t1, double t2);

  [[nodiscard]] double u_o() const { return u_o_; }
  [[nodiscard]] double eta() const { return eta_; }
  [[nodiscard]] double lambda() const { return lambda_; }
  [[nodiscard]] double t1() const { return t1_; }
  [[nodiscard]] double t2() const { return t2_; }

  // eta * u_o, the utility premium of double-speed service.
  [[nodiscard]] double premium() const { return eta_ * u_o_; }
  // eta * u_o * exp(lambda * T1); recurs in every symmetric-phase formula.
  [[nodiscard]] double boundary_asymmetry() const;
  // Upper end of the switching-cost support at time t.
  [[nodiscard]] double cost_ceiling(double t) const;

  [[nodiscard]] MarketParams with_eta(double eta) const;
  [[nodiscard]] MarketParams with_t1(double t1) const;

  // Throws std::domain_error if t is outside [0, T2].
  [[nodiscard]] Phase phase_at(double t) const;

  friend bool operator==(const MarketParams&, const MarketParams&) = default;

 private:
  double u_o_;
  double eta_;
  double lambda_;
  double t1_;
  double t2_;
};

struct PricePair {
  double p_i = 0.0;
  double p_j = 0.0;
};

struct SharePair {
  double q_i = 0.5;
  double q_j = 0.5;
};

struct Utilities {
  double u_i = 0.0;
  double u_j = 0.0;
};

// Each operator starts with half the market.
inline constexpr SharePair kInitialShares{0.5, 0.5};

// Mass of users switching j -> i during the asymmetric phase.
struct SwitchingMass {
  double mass = 0.0;       // clamped to [0, 1/2]
  double unclamped = 0.0;  // raw value of the churn formula
  bool saturated = false;  // true iff clamping changed the value
};

enum class FlowDirection { kNone, kIToJ, kJToI };

// Churn out of the higher-priced operator during the symmetric phase.
struct SymmetricFlow {
  FlowDirection direction = FlowDirection::kNone;
  double mass = 0.0;  // non-negative, bounded by the source's locked-in share
  double unclamped = 0.0;
  bool saturated = false;
};

Utilities utilities(const MarketParams& market, double t);

// Precondition 0 <= t <= T1, else std::domain_error.
SwitchingMass switching_mass_asym(const MarketParams& market, double t,
                                  const PricePair& prices);
// Mass of users switching i -> j, non-zero only when p_i - p_j exceeds the
// premium eta*u_o. Same preconditions.
SwitchingMass reverse_switching_mass_asym(const MarketParams& market, double t,
                                          const PricePair& prices);
// q_i = 1/2 + (j -> i mass) - (i -> j mass).
SharePair shares_asym(const MarketParams& market, double t,
                      const PricePair& prices);

// Precondition T1 < t <= T2, else std::domain_error. `locked_in` is the share
// split reached at the end of the asymmetric phase.
SymmetricFlow switching_mass_sym(const MarketParams& market, double t,
                                 const PricePair& prices,
                                 const SharePair& locked_in);
SharePair shares_sym(const MarketParams& market, double t,
                     const PricePair& prices, const SharePair& locked_in);

}  // namespace spectrum
