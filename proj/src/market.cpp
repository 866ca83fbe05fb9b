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

#include "spectrum/market.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spectrum {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("market: " + what);
}

void require_finite_prices(const PricePair& prices) {
  if (!std::isfinite(prices.p_i) || !std::isfinite(prices.p_j) ||
      prices.p_i < 0.0 || prices.p_j < 0.0) {
    throw std::invalid_argument("prices must be finite and non-negative");
  }
}

}  // namespace

std::string_view phase_name(Phase phase) {
  return phase == Phase::kAsymmetric ? "asymmetric" : "symmetric";
}

std::string_view mno_name(Mno who) { return who == Mno::kI ? "i" : "j"; }

MarketParams::MarketParams(double u_o, double eta, double lambda, double t1,
                           double t2)
    : u_o_(u_o), eta_(eta), lambda_(lambda), t1_(t1), t2_(t2) {
  require(std::isfinite(u_o) && u_o > 0.0, "u_o must be > 0");
  // eta = 0 is admitted as the degenerate no-asymmetry limit.
  require(std::isfinite(eta) && eta >= 0.0 && eta < 1.0,
          "eta must lie in [0, 1)");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be >= 0");
  require(std::isfinite(t1) && t1 > 0.0, "T1 must be > 0");
  require(std::isfinite(t2) && t2 > t1, "T2 must exceed T1");
  require(premium() < std::exp(-lambda * t1),
          "eta * u_o must stay below exp(-lambda * T1) (total churn)");
}

double MarketParams::boundary_asymmetry() const {
  return premium() * std::exp(lambda_ * t1_);
}

double MarketParams::cost_ceiling(double t) const {
  return std::exp(-lambda_ * t);
}

MarketParams MarketParams::with_eta(double eta) const {
  return {u_o_, eta, lambda_, t1_, t2_};
}

MarketParams MarketParams::with_t1(double t1) const {
  return {u_o_, eta_, lambda_, t1, t2_};
}

Phase MarketParams::phase_at(double t) const {
  if (!(t >= 0.0 && t <= t2_)) {
    throw std::domain_error("time " + std::to_string(t) +
                            " outside [0, T2]");
  }
  return t <= t1_ ? Phase::kAsymmetric : Phase::kSymmetric;
}

Utilities utilities(const MarketParams& market, double t) {
  const double boosted = (1.0 + market.eta()) * market.u_o();
  if (market.phase_at(t) == Phase::kAsymmetric) return {boosted, market.u_o()};
  return {boosted, boosted};
}

SwitchingMass switching_mass_asym(const MarketParams& market, double t,
                                  const PricePair& prices) {
  if (market.phase_at(t) != Phase::kAsymmetric) {
    throw std::domain_error("asymmetric churn requires 0 <= t <= T1");
  }
  require_finite_prices(prices);
  // A j-user switches iff its cost s <= eta*u_o + p_j - p_i, with s having
  // density exp(lambda t); half the market starts at j.
  const double threshold = market.premium() + prices.p_j - prices.p_i;
  const double raw = 0.5 * std::exp(market.lambda() * t) * threshold;
  const double clamped = std::clamp(raw, 0.0, 0.5);
  return {clamped, raw, clamped != raw};
}

SwitchingMass reverse_switching_mass_asym(const MarketParams& market, double t,
                                          const PricePair& prices) {
  if (market.phase_at(t) != Phase::kAsymmetric) {
    throw std::domain_error("asymmetric churn requires 0 <= t <= T1");
  }
  require_finite_prices(prices);
  // An i-user leaves iff its cost s <= p_i - p_j - eta*u_o.
  const double threshold = prices.p_i - prices.p_j - market.premium();
  const double raw = 0.5 * std::exp(market.lambda() * t) * threshold;
  const double clamped = std::clamp(raw, 0.0, 0.5);
  return {clamped, raw, clamped != raw};
}

SharePair shares_asym(const MarketParams& market, double t,
                      const PricePair& prices) {
  const double q_i = kInitialShares.q_i +
                     switching_mass_asym(market, t, prices).mass -
                     reverse_switching_mass_asym(market, t, prices).mass;
  return {q_i, 1.0 - q_i};
}

SymmetricFlow switching_mass_sym(const MarketParams& market, double t,
                                 const PricePair& prices,
                                 const SharePair& locked_in) {
  if (market.phase_at(t) != Phase::kSymmetric) {
    throw std::domain_error("symmetric churn requires T1 < t <= T2");
  }
  require_finite_prices(prices);
  if (prices.p_i == prices.p_j) return {};

  // Utilities are equal, so only the price gap drives churn out of the
  // dearer operator's locked-in base.
  const bool i_dearer = prices.p_i > prices.p_j;
  const double gap = std::abs(prices.p_i - prices.p_j);
  const double base = i_dearer ? locked_in.q_i : locked_in.q_j;
  const double raw = gap * base * std::exp(market.lambda() * t);
  const double clamped = std::min(raw, base);
  return {i_dearer ? FlowDirection::kIToJ : FlowDirection::kJToI, clamped, raw,
          clamped != raw};
}

SharePair shares_sym(const MarketParams& market, double t,
                     const PricePair& prices, const SharePair& locked_in) {
  const SymmetricFlow flow = switching_mass_sym(market, t, prices, locked_in);
  double q_i = locked_in.q_i;
  if (flow.direction == FlowDirection::kIToJ) q_i -= flow.mass;
  if (flow.direction == FlowDirection::kJToI) q_i += flow.mass;
  return {q_i, 1.0 - q_i};
}

}  // namespace spectrum
