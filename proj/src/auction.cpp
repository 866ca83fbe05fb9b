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

#include "spectrum/auction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace spectrum {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("auction: " + what);
}

bool valid_cost(double c) { return std::isfinite(c) && c >= 0.0; }
bool valid_alpha(double a) { return std::isfinite(a) && a >= 0.0 && a <= 1.0; }

// Root of a monotone-bracketed f on [lo, hi]; requires f(lo), f(hi) to have
// opposite signs (or one of them zero).
constexpr double kReserveSlack = 1e-9;

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

AuctionParams::AuctionParams(double c_a, double c_b, double c_bs,
                             double alpha_i, double alpha_j)
    : c_a_(c_a), c_b_(c_b), c_bs_(c_bs), alpha_i_(alpha_i), alpha_j_(alpha_j) {
  require(valid_cost(c_a) && valid_cost(c_b) && valid_cost(c_bs),
          "costs must be finite and non-negative");
  require(valid_alpha(alpha_i) && valid_alpha(alpha_j),
          "spite coefficients must lie in [0, 1]");
}

AuctionParams AuctionParams::with_c_a(double c_a) const {
  return {c_a, c_b_, c_bs_, alpha_i_, alpha_j_};
}

AuctionParams AuctionParams::with_alpha_i(double alpha_i) const {
  return {c_a_, c_b_, c_bs_, alpha_i, alpha_j_};
}

SpectrumAuction::SpectrumAuction(const MarketParams& market,
                                 const AuctionParams& auction)
    : market_(market),
      auction_(auction),
      revenue_(revenues(market)),
      pi_b_(revenue_.r_b - auction.c_b() - auction.c_bs()) {}

void SpectrumAuction::require_nondegenerate() const {
  if (!(auction_.c_a() < r_a())) {
    throw std::invalid_argument(
        "block A is worth less than its reserve price (c_A >= r_A)");
  }
}

double SpectrumAuction::spiteful_objective(Mno who, double b_i,
                                           double b_j) const {
  if (!std::isfinite(b_i) || !std::isfinite(b_j)) {
    throw std::invalid_argument("bids must be finite");
  }
  const bool i_wins = b_i >= b_j;
  const bool wins = (who == Mno::kI) == i_wins;
  const double own = who == Mno::kI ? b_i : b_j;
  const double rival = who == Mno::kI ? b_j : b_i;
  if (wins) return r_a() - own;
  const double alpha = auction_.alpha(who);
  return (1.0 - alpha) * pi_b_ - alpha * (r_a() - rival);
}

double SpectrumAuction::expected_objective(Mno who, double bid) const {
  require_nondegenerate();
  const double c_a = auction_.c_a();
  if (!(bid >= c_a && bid <= r_a())) {
    throw std::domain_error("bid outside the belief support [c_A, r_A]");
  }
  const double alpha = auction_.alpha(who);
  const double margin = r_a() - bid;
  // Win against rival bids in [c_A, bid], lose against (bid, r_A].
  return (bid - c_a) * margin + margin * (1.0 - alpha) * pi_b_ -
         0.5 * alpha * margin * margin;
}

double SpectrumAuction::bid_formula(double alpha, double c_a) const {
  return ((1.0 + alpha) * r_a() - (1.0 - alpha) * pi_b_ + c_a) / (2.0 + alpha);
}

double SpectrumAuction::optimal_bid_for_alpha(double alpha) const {
  require_nondegenerate();
  return bid_formula(alpha, auction_.c_a());
}

double SpectrumAuction::optimal_bid(Mno who) const {
  return optimal_bid_for_alpha(auction_.alpha(who));
}

AuctionOutcome SpectrumAuction::settle() const {
  AuctionOutcome out;
  out.b_i = optimal_bid(Mno::kI);
  out.b_j = optimal_bid(Mno::kJ);
  out.winner = out.b_i >= out.b_j ? Mno::kI : Mno::kJ;
  const double winning_bid = out.winner == Mno::kI ? out.b_i : out.b_j;
  const double winner_profit = r_a() - winning_bid;
  out.pi_i = out.winner == Mno::kI ? winner_profit : pi_b_;
  out.pi_j = out.winner == Mno::kJ ? winner_profit : pi_b_;
  if (out.pi_j != 0.0) out.rho_gain = out.pi_i / out.pi_j;
  const double alpha = auction_.alpha(out.winner);
  out.winner_profit_printed_form =
      (r_a() - (1.0 - alpha) * pi_b_ + auction_.c_a()) / (2.0 + alpha);
  return out;
}

std::optional<double> SpectrumAuction::winner_profit_gain(double alpha) const {
  if (pi_b_ == 0.0) return std::nullopt;
  return (r_a() - optimal_bid_for_alpha(alpha)) / pi_b_;
}

double SpectrumAuction::crossover_alpha_closed_form() const {
  return (r_a() - auction_.c_a() - pi_b_) / (2.0 * pi_b_);
}

std::optional<double> SpectrumAuction::crossover_alpha() const {
  require_nondegenerate();
  // A ratio of 1 only means "equal profits" when pi_B is positive.
  if (!(pi_b_ > 0.0)) return std::nullopt;
  const auto excess = [&](double alpha) {
    return r_a() - bid_formula(alpha, auction_.c_a()) - pi_b_;
  };
  const double at_zero = excess(0.0);
  const double at_one = excess(1.0);
  if ((at_zero > 0.0 && at_one > 0.0) || (at_zero < 0.0 && at_one < 0.0)) {
    return std::nullopt;
  }
  return bisect(excess, 0.0, 1.0);
}

std::optional<double> SpectrumAuction::fair_reserve(double alpha) const {
  if (!valid_alpha(alpha)) {
    throw std::invalid_argument("spite coefficient must lie in [0, 1]");
  }
  if (!(pi_b_ > 0.0)) return std::nullopt;
  const double lo = auction_.c_b();
  const double hi = r_a();
  if (!(lo < hi)) return std::nullopt;
  // Decreasing in c_A: a higher reserve raises the winning bid.
  const auto excess = [&](double c_a) {
    return r_a() - bid_formula(alpha, c_a) - pi_b_;
  };
  if (!(excess(hi) < 0.0)) return std::nullopt;
  const double at_lo = excess(lo);
  if (at_lo < 0.0) {
    // A root at c_B itself can land just outside through rounding of alpha.
    if (at_lo > -kReserveSlack * std::max(1.0, r_a())) return lo;
    return std::nullopt;
  }
  return bisect(excess, lo, hi);
}

}  // namespace spectrum
