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

#include "spectrum/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spectrum/pricing.hpp"

namespace spectrum {
namespace {

constexpr std::int64_t kChunkUsers = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform on [0, 1) from the top 53 bits; std::uniform_real_distribution is
// not bit-reproducible across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double own_share(Phase phase, const MarketParams& market, double t,
                 const PricePair& prices, Mno who, const SharePair& locked_in) {
  const SharePair q = phase == Phase::kAsymmetric
                          ? shares_asym(market, t, prices)
                          : shares_sym(market, t, prices, locked_in);
  return who == Mno::kI ? q.q_i : q.q_j;
}

}  // namespace

void GridSpec::validate() const {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw std::invalid_argument("grid: empty range (need lo < hi)");
  }
  if (!(step > 0.0)) throw std::invalid_argument("grid: step must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("grid: tol must be > 0");
  if (max_iters < 1) throw std::invalid_argument("grid: max_iters must be >= 1");
}

std::int64_t GridSpec::last_index() const {
  // The small slack keeps hi itself on the grid when (hi - lo) / step is
  // integral up to rounding.
  return static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9));
}

GridSpec GridSpec::prices(const MarketParams& market, double t, double step) {
  return {0.0, 2.0 * market.cost_ceiling(t) + market.premium(), step, 10'000,
          step};
}

GridSpec GridSpec::bids(const SpectrumAuction& auction, double step) {
  return {auction.params().c_a(), auction.r_a(), step, 10'000, step};
}

double best_response(Phase phase, const MarketParams& market, double t,
                     double opponent_price, Mno who, const GridSpec& grid,
                     const SharePair& locked_in) {
  grid.validate();
  const Phase actual = market.phase_at(t);
  if (actual != phase) {
    throw std::domain_error("time " + std::to_string(t) + " is not in the " +
                            std::string(phase_name(phase)) + " phase");
  }
  double best_price = grid.lo;
  double best_revenue = -1.0;
  for (std::int64_t k = 0, last = grid.last_index(); k <= last; ++k) {
    const double own = grid.point(k);
    const PricePair prices = who == Mno::kI ? PricePair{own, opponent_price}
                                            : PricePair{opponent_price, own};
    const double revenue =
        own * own_share(phase, market, t, prices, who, locked_in);
    if (revenue > best_revenue) {
      best_revenue = revenue;
      best_price = own;
    }
  }
  return best_price;
}

SharePair oracle_locked_in_shares(const MarketParams& market, double step) {
  const double t1 = market.t1();
  const NashSolution boundary = nash_by_iteration(
      Phase::kAsymmetric, market, t1, GridSpec::prices(market, t1, step));
  return shares_asym(market, t1, boundary.prices);
}

NashSolution nash_by_iteration(Phase phase, const MarketParams& market,
                               double t, const GridSpec& grid,
                               std::optional<PricePair> start,
                               std::optional<SharePair> locked_in) {
  grid.validate();
  NashSolution out;
  if (phase == Phase::kSymmetric) {
    out.locked_in = locked_in ? *locked_in
                              : oracle_locked_in_shares(market, grid.step);
  }
  const double mid = 0.5 * (grid.lo + grid.hi);
  PricePair p = start.value_or(PricePair{mid, mid});
  for (int iter = 1; iter <= grid.max_iters; ++iter) {
    const double next_i =
        best_response(phase, market, t, p.p_j, Mno::kI, grid, out.locked_in);
    const double next_j =
        best_response(phase, market, t, next_i, Mno::kJ, grid, out.locked_in);
    const double move =
        std::max(std::abs(next_i - p.p_i), std::abs(next_j - p.p_j));
    p = {next_i, next_j};
    if (move <= grid.tol) {
      out.prices = p;
      out.iterations = iter;
      return out;
    }
  }
  throw OracleFailure("best-response iteration did not converge within " +
                      std::to_string(grid.max_iters) + " rounds at t=" +
                      std::to_string(t));
}

SharePair mc_shares(const MarketParams& market, double t,
                    const PricePair& prices, const McConfig& mc,
                    std::optional<PricePair> boundary_prices) {
  if (mc.n_users < 1) throw std::invalid_argument("mc: n_users must be >= 1");
  const Phase phase = market.phase_at(t);
  if (phase == Phase::kSymmetric && !boundary_prices) {
    throw std::invalid_argument(
        "mc: symmetric phase needs the prices in force at T1");
  }

  const std::int64_t n = mc.n_users;
  const std::int64_t initial_j = n / 2;  // users [0, initial_j) start at j
  const double t1 = market.t1();

  // Switching rule: leave `from` for `to` iff u_from - p_from <= u_to - p_to - s.
  const auto switches = [](double u_from, double p_from, double u_to,
                           double p_to, double cost) {
    return u_from - p_from <= u_to - p_to - cost;
  };

  std::int64_t at_i = 0;
  for (std::int64_t chunk = 0; chunk * kChunkUsers < n; ++chunk) {
    std::mt19937_64 rng(splitmix64(mc.seed + static_cast<std::uint64_t>(chunk)));
    const std::int64_t begin = chunk * kChunkUsers;
    const std::int64_t end = std::min(n, begin + kChunkUsers);
    for (std::int64_t user = begin; user < end; ++user) {
      bool with_i = user >= initial_j;
      const double churn_time = phase == Phase::kAsymmetric ? t : t1;
      const PricePair& churn_prices =
          phase == Phase::kAsymmetric ? prices : *boundary_prices;
      {
        const Utilities u = utilities(market, churn_time);
        const double cost = unit_uniform(rng) * market.cost_ceiling(churn_time);
        with_i = with_i ? !switches(u.u_i, churn_prices.p_i, u.u_j, churn_prices.p_j, cost)
                        : switches(u.u_j, churn_prices.p_j, u.u_i, churn_prices.p_i, cost);
      }
      if (phase == Phase::kSymmetric) {
        const Utilities u = utilities(market, t);
        const double cost = unit_uniform(rng) * market.cost_ceiling(t);
        if (with_i && prices.p_i > prices.p_j) {
          with_i = !switches(u.u_i, prices.p_i, u.u_j, prices.p_j, cost);
        } else if (!with_i && prices.p_j > prices.p_i) {
          with_i = switches(u.u_j, prices.p_j, u.u_i, prices.p_i, cost);
        }
      }
      at_i += with_i ? 1 : 0;
    }
  }
  const double q_i = static_cast<double>(at_i) / static_cast<double>(n);
  return {q_i, 1.0 - q_i};
}

RevenuePair quad_revenue(Phase phase, const MarketParams& market) {
  using boost::math::quadrature::gauss_kronrod;
  const double t1 = market.t1();

  std::function<PricePair(double)> revenue_rate;
  double a = 0.0;
  double b = t1;
  if (phase == Phase::kAsymmetric) {
    revenue_rate = [&](double t) {
      const PricePair p = eq_prices_asym(market, t);
      const SharePair q = shares_asym(market, t, p);
      return PricePair{p.p_i * q.q_i, p.p_j * q.q_j};
    };
  } else {
    const SharePair locked = shares_asym(market, t1, eq_prices_asym(market, t1));
    a = t1;
    b = market.t2();
    revenue_rate = [&market, locked](double t) {
      const PricePair p = eq_prices_sym(market, t);
      const SharePair q = shares_sym(market, t, p, locked);
      return PricePair{p.p_i * q.q_i, p.p_j * q.q_j};
    };
  }

  const auto integrate = [&](auto&& f) {
    double error = 0.0;
    const double value =
        gauss_kronrod<double, 15>::integrate(f, a, b, 15, 1e-13, &error);
    if (!(error <= 1e-10)) {
      throw OracleFailure("quadrature error estimate " + std::to_string(error) +
                          " exceeds 1e-10");
    }
    return value;
  };
  return {integrate([&](double t) { return revenue_rate(t).p_i; }),
          integrate([&](double t) { return revenue_rate(t).p_j; })};
}

double grid_optimal_bid(const SpectrumAuction& auction, Mno who,
                        const GridSpec& grid) {
  grid.validate();
  double best_bid = grid.lo;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::int64_t k = 0, last = grid.last_index(); k <= last; ++k) {
    const double bid = std::min(grid.point(k), auction.r_a());
    const double value = auction.expected_objective(who, bid);
    if (value > best_value) {
      best_value = value;
      best_bid = bid;
    }
  }
  return best_bid;
}

double finite_diff(const std::function<double(double)>& fn, double at,
                   double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_diff: h must be > 0");
  try {
    return (fn(at + h) - fn(at - h)) / (2.0 * h);
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(std::string("finite_diff: shifted point invalid: ") +
                            e.what());
  }
}

}  // namespace spectrum
