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

// Reference parameter sets and frozen values shared by the unit tests.

#pragma once

#include <cmath>

#include "spectrum/auction.hpp"
#include "spectrum/market.hpp"

namespace spectrum::testing {

// u_o = 1, lambda = 0.01, T2 = 10.
inline MarketParams reference_market(double eta = 0.6, double t1 = 1.0) {
  return {1.0, eta, 0.01, t1, 10.0};
}

// c_B = c_BS = 1, alpha_j = 0.
inline AuctionParams reference_auction(double c_a = 2.0, double alpha_i = 0.6,
                                     double alpha_j = 0.0) {
  return {c_a, 1.0, 1.0, alpha_i, alpha_j};
}

// Values frozen from an independent scipy run (adaptive quadrature of price
// times churn-model share; bounded scalar maximization of the expected
// objective; brentq on the profit ratio) at eta = 0.6, T1 = 1.
inline constexpr double kRiAsym = 0.7176086467;
inline constexpr double kRjAsym = 0.3176086467;
inline constexpr double kRiSym = 4.0380124756;
inline constexpr double kRjSym = 3.0832914961;
inline constexpr double kRA = 4.7556211223;
inline constexpr double kRB = 3.4009001428;
inline constexpr double kRGain = 1.3983418867;
inline constexpr double kPiB = 1.4009001428;
inline constexpr double kRAT1_11 = 4.7800601390;  // T1 = 1.1
inline constexpr double kRBT1_11 = 3.3956408387;
inline constexpr double kBid06 = 3.4802437456;  // alpha 0.6, c_A 2
inline constexpr double kBid08 = 3.6714064255;  // alpha 0.8, c_A 2
inline constexpr double kBid00 = 2.6773604897;  // alpha 0,   c_A 2
inline constexpr double kCrossoverCA2 = 0.4835180389;
inline constexpr double kCrossoverCA1 = 0.8404314153;

}  // namespace spectrum::testing
