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

#include "spectrum/pricing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spectrum {
namespace {

// (1 - exp(-k T)) / k with the k -> 0 limit T.
double decay_integral(double k, double span) {
  return k == 0.0 ? span : -std::expm1(-k * span) / k;
}

// (exp(k T) - 1) / k with the k -> 0 limit T.
double growth_integral(double k, double span) {
  return k == 0.0 ? span : std::expm1(k * span) / k;
}

}  // namespace

EquilibriumPricePath EquilibriumPricePath::for_phase(const MarketParams& market,
                                                     Phase phase) {
  if (phase == Phase::kAsymmetric) {
    const double offset = market.premium() / 3.0;
    return {phase, offset, -offset, market.lambda(), 0.0, market.t1()};
  }
  const double x = market.boundary_asymmetry();
  const double denom = 9.0 + 3.0 * x;
  return {phase, (9.0 + x) / denom, (9.0 - x) / denom, market.lambda(),
          market.t1(), market.t2()};
}

PricePair EquilibriumPricePath::at(double t) const {
  if (!(t >= lo_ && t <= hi_)) {
    throw std::domain_error("time " + std::to_string(t) + " outside the " +
                            std::string(phase_name(phase_)) + " phase");
  }
  const double decay = std::exp(-lambda_ * t);
  if (phase_ == Phase::kAsymmetric) return {decay + coeff_i_, decay + coeff_j_};
  return {coeff_i_ * decay, coeff_j_ * decay};
}

PricePair eq_prices_asym(const MarketParams& market, double t) {
  if (market.phase_at(t) != Phase::kAsymmetric) {
    throw std::domain_error("asymmetric prices require 0 <= t <= T1");
  }
  return EquilibriumPricePath::for_phase(market, Phase::kAsymmetric).at(t);
}

PricePair eq_prices_sym(const MarketParams& market, double t) {
  if (market.phase_at(t) != Phase::kSymmetric) {
    throw std::domain_error("symmetric prices require T1 < t <= T2");
  }
  return EquilibriumPricePath::for_phase(market, Phase::kSymmetric).at(t);
}

PricePair eq_prices(const MarketParams& market, double t) {
  return market.phase_at(t) == Phase::kAsymmetric ? eq_prices_asym(market, t)
                                                  : eq_prices_sym(market, t);
}

SharePair eq_shares(const MarketParams& market, double t) {
  if (market.phase_at(t) == Phase::kAsymmetric) {
    const double lead = market.premium() * std::exp(market.lambda() * t);
    return {(3.0 + lead) / 6.0, (3.0 - lead) / 6.0};
  }
  const double x = market.boundary_asymmetry();
  return {0.5 + x / 18.0, 0.5 - x / 18.0};
}

SharePair locked_in_shares(const MarketParams& market) {
  return eq_shares(market, market.t1());
}

FocResiduals foc_residuals(const MarketParams& market, double t,
                           const PricePair& p) {
  const double growth = std::exp(market.lambda() * t);
  if (market.phase_at(t) == Phase::kAsymmetric) {
    const double a = market.premium();
    return {0.5 * (1.0 + (a + p.p_j - 2.0 * p.p_i) * growth),
            0.5 * (1.0 - (a - p.p_i + 2.0 * p.p_j) * growth)};
  }
  // Branch p_i >= p_j, where i's locked-in base erodes.
  const SharePair base = locked_in_shares(market);
  return {base.q_i * (1.0 - (2.0 * p.p_i - p.p_j) * growth),
          base.q_j - (2.0 * p.p_j - p.p_i) * base.q_i * growth};
}

FallingPriceLevels falling_price_levels(const MarketParams& market) {
  const double a = market.premium();
  const double x = market.boundary_asymmetry();
  const double denom = 9.0 + 3.0 * x;
  return {a * (5.0 + x) / denom, a * (1.0 - x) / denom};
}

RevenueReport revenues(const MarketParams& market) {
  const double lambda = market.lambda();
  const double t1 = market.t1();
  const double a = market.premium();
  const double x = market.boundary_asymmetry();

  RevenueReport r;
  const double common = 0.5 * decay_integral(lambda, t1) +
                        a * a * growth_integral(lambda, t1) / 18.0;
  r.r_i_asym = common + a * t1 / 3.0;
  r.r_j_asym = common - a * t1 / 3.0;

  const double horizon =
      std::exp(-lambda * t1) * decay_integral(lambda, market.t2() - t1);
  const double scale = 54.0 * (3.0 + x);
  r.r_i_sym = (9.0 + x) * (9.0 + x) / scale * horizon;
  r.r_j_sym = (9.0 - x) * (9.0 - x) / scale * horizon;

  r.r_a = r.r_i_asym + r.r_i_sym;
  r.r_b = r.r_j_asym + r.r_j_sym;
  r.r_gain = r.r_a / r.r_b;
  return r;
}

DeploymentSlopes deployment_slopes(const MarketParams& market,
                                   std::optional<double> h) {
  const double step = h.value_or(1e-4 * market.t1());
  if (!(step > 0.0)) throw std::domain_error("finite-difference step must be > 0");
  auto shifted = [&](double t1) {
    try {
      return revenues(market.with_t1(t1));
    } catch (const std::invalid_argument& e) {
      throw std::domain_error(std::string("T1 step leaves valid region: ") +
                              e.what());
    }
  };
  const RevenueReport up = shifted(market.t1() + step);
  const RevenueReport down = shifted(market.t1() - step);
  return {(up.r_a - down.r_a) / (2.0 * step),
          (up.r_b - down.r_b) / (2.0 * step)};
}

}  // namespace spectrum
