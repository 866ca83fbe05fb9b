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

// Acceptance suite. Runs every exit criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion, followed by indented detail lines.
// Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spectrum/auction.hpp"
#include "spectrum/commands.hpp"
#include "spectrum/market.hpp"
#include "spectrum/oracles.hpp"
#include "spectrum/pricing.hpp"
#include "spectrum/scenario.hpp"

namespace {

using namespace spectrum;
using Clock = std::chrono::steady_clock;

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  // Records a sub-check. Fails the criterion when !ok.
  void expect(bool ok, const std::string& what) {
    passed_ = passed_ && ok;
    details_.push_back((ok ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& what) { details_.push_back("      " + what); }

  bool report(double seconds) const {
    std::printf("[%s] %d  %s  (%.2f s)\n", passed_ ? "PASS" : "FAIL", id_,
                title_.c_str(), seconds);
    for (const auto& d : details_) std::printf("        %s\n", d.c_str());
    std::fflush(stdout);
    return passed_;
  }

 private:
  int id_;
  std::string title_;
  bool passed_ = true;
  std::vector<std::string> details_;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<MarketParams> preset_markets() {
  std::vector<MarketParams> out;
  for (const Preset& p : presets()) out.push_back(p.scenario.market());
  return out;
}

// Markets along every preset sweep whose axis moves the market, plus the base
// market of each preset. Infeasible points are skipped.
std::vector<MarketParams> preset_markets_with_sweeps() {
  std::vector<MarketParams> out = preset_markets();
  for (const Preset& p : presets()) {
    if (!p.scenario.sweep) continue;
    const SweepAxis axis = p.scenario.sweep->axis;
    if (axis != SweepAxis::kEta && axis != SweepAxis::kT1) continue;
    for (double v : p.scenario.sweep->values()) {
      try {
        out.push_back(p.scenario.at_axis(axis, v).market());
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return out;
}

// 1. Closed-form equilibrium against best-response iteration.
bool closed_form_vs_oracle_nash() {
  Criterion c(1, "closed-form prices vs best-response Nash (tol 1e-4, grid 1e-5); FOC < 1e-9; < 5 s");
  const auto start = Clock::now();
  constexpr double kStep = 1e-5;
  constexpr double kTol = 1e-4;
  double worst_nash = 0.0;
  double worst_foc = 0.0;
  for (const char* name : {"fig3a", "fig3b"}) {
    const MarketParams m = find_preset(name).scenario.market();
    try {
      const SharePair locked = oracle_locked_in_shares(m, kStep);
      for (double t : {0.0, 0.5, m.t1(), 2.0, 5.0, m.t2()}) {
        const NashSolution s = nash_by_iteration(
            m.phase_at(t), m, t, GridSpec::prices(m, t, kStep), std::nullopt, locked);
        const PricePair closed = eq_prices(m, t);
        const double err = std::max(std::abs(s.prices.p_i - closed.p_i),
                                    std::abs(s.prices.p_j - closed.p_j));
        const FocResiduals foc = foc_residuals(m, t, closed);
        const double foc_err = std::max(std::abs(foc.d_i), std::abs(foc.d_j));
        worst_nash = std::max(worst_nash, err);
        worst_foc = std::max(worst_foc, foc_err);
        c.expect(err <= kTol && foc_err < 1e-9,
                 std::string(name) + fmt(" t=%-4g |nash - closed| = %.2e  FOC = %.2e", t, err, foc_err));
      }
    } catch (const OracleFailure& e) {
      c.expect(false, std::string(name) + ": " + e.what());
    }
  }
  const double secs = seconds_since(start);
  c.expect(secs < 5.0, fmt("runtime %.2f s < 5 s", secs));
  c.note(fmt("worst nash error %.2e, worst FOC residual %.2e", worst_nash, worst_foc));
  return c.report(secs);
}

// 2. Revenue integrals against quadrature.
bool revenue_integrals() {
  Criterion c(2, "revenue closed forms vs quadrature (rel 1e-6) on the eta sweep at T1 in {1, 2}; spot values (1e-4); < 5 s");
  const auto start = Clock::now();
  const Scenario fig5 = find_preset("fig5").scenario;
  double worst = 0.0;
  int points = 0;
  for (double t1 : {1.0, 2.0}) {
    for (double eta : fig5.sweep->values()) {
      Scenario s = fig5.at_axis(SweepAxis::kEta, eta);
      s.t1 = t1;
      const MarketParams m = s.market();
      const RevenueReport r = revenues(m);
      try {
        const RevenuePair a = quad_revenue(Phase::kAsymmetric, m);
        const RevenuePair b = quad_revenue(Phase::kSymmetric, m);
        for (auto [q, closed] : {std::pair{a.r_i, r.r_i_asym}, {a.r_j, r.r_j_asym},
                                 {b.r_i, r.r_i_sym}, {b.r_j, r.r_j_sym}}) {
          worst = std::max(worst, std::abs(q - closed) / std::abs(closed));
        }
        ++points;
      } catch (const OracleFailure& e) {
        c.expect(false, e.what());
      }
    }
  }
  c.expect(worst <= 1e-6, fmt("%g parameter points, worst relative error %.2e", points, worst));

  const RevenueReport spot = revenues(fig5.market());
  c.expect(std::abs(spot.r_a - 4.755630) <= 1e-4, fmt("r_A = %.10f vs 4.755630", spot.r_a));
  c.expect(std::abs(spot.r_b - 3.400890) <= 1e-4, fmt("r_B = %.10f vs 3.400890", spot.r_b));
  c.expect(std::abs(spot.r_gain - 1.398350) <= 1e-4, fmt("r_gain = %.10f vs 1.398350", spot.r_gain));
  const double secs = seconds_since(start);
  c.expect(secs < 5.0, fmt("runtime %.2f s < 5 s", secs));
  return c.report(secs);
}

// 3. Price drop at the phase boundary.
bool phase_boundary_drop() {
  Criterion c(3, "falling price levels equal the jump in equilibrium prices at T1 (tol 1e-12)");
  const auto start = Clock::now();
  double worst = 0.0;
  const auto markets = preset_markets_with_sweeps();
  for (const MarketParams& m : markets) {
    const FallingPriceLevels phi = falling_price_levels(m);
    const PricePair left = eq_prices_asym(m, m.t1());
    const PricePair right = EquilibriumPricePath::for_phase(m, Phase::kSymmetric).at(m.t1());
    worst = std::max({worst, std::abs(phi.phi_i - (left.p_i - right.p_i)),
                      std::abs(phi.phi_j - (left.p_j - right.p_j))});
  }
  c.expect(worst <= 1e-12, fmt("%g markets, worst |phi - jump| = %.2e", static_cast<double>(markets.size()), worst));
  const FallingPriceLevels phi = falling_price_levels(find_preset("fig3b").scenario.market());
  // The reference values carry six decimals.
  c.expect(std::abs(phi.phi_i - 0.310925) <= 1e-6, fmt("phi_i = %.10f vs 0.310925", phi.phi_i));
  c.expect(std::abs(phi.phi_j - 0.021850) <= 1e-6, fmt("phi_j = %.10f vs 0.021850", phi.phi_j));
  return c.report(seconds_since(start));
}

// 4. Simulated population against the share formulas.
bool monte_carlo_churn() {
  Criterion c(4, "Monte Carlo shares within 3 sigma (n = 1e6, fixed seed) at 6 times per preset; < 10 s");
  const auto start = Clock::now();
  const McConfig mc;
  double worst_ratio = 0.0;
  for (const Preset& p : presets()) {
    const MarketParams m = p.scenario.market();
    const PricePair boundary = eq_prices(m, m.t1());
    for (double t : {0.0, 0.5, m.t1(), 2.0, 5.0, m.t2()}) {
      const SharePair expected = eq_shares(m, t);
      const SharePair sim = mc_shares(m, t, eq_prices(m, t), mc, boundary);
      const double sigma = std::sqrt(expected.q_i * (1.0 - expected.q_i) / static_cast<double>(mc.n_users));
      const double err = std::abs(sim.q_i - expected.q_i);
      worst_ratio = std::max(worst_ratio, err / sigma);
      if (err > 3.0 * sigma) {
        c.expect(false, std::string(p.name) + fmt(" t=%g error %.2e > 3 sigma %.2e", t, err, 3.0 * sigma));
      }
    }
  }
  c.expect(worst_ratio <= 3.0, fmt("worst deviation %.2f sigma", worst_ratio));
  const double secs = seconds_since(start);
  c.expect(secs < 10.0, fmt("runtime %.2f s < 10 s", secs));
  return c.report(secs);
}

// 5. Closed-form bid against a grid search of the expected objective.
bool bid_optimality() {
  Criterion c(5, "grid-optimal bid within 1e-4 of the closed form for 6 alphas x c_A in {1, 2}");
  const auto start = Clock::now();
  const Scenario base = find_preset("fig6").scenario;
  double worst = 0.0;
  for (double c_a : {1.0, 2.0}) {
    for (double alpha : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
      Scenario s = base;
      s.c_a = c_a;
      s.alpha_i = alpha;
      const SpectrumAuction a(s.market(), s.auction());
      const double grid = grid_optimal_bid(a, Mno::kI, GridSpec::bids(a, 1e-5));
      worst = std::max(worst, std::abs(grid - a.optimal_bid(Mno::kI)));
    }
  }
  c.expect(worst <= 1e-4, fmt("worst |grid - closed| = %.2e", worst));
  for (auto [alpha, expected] : {std::pair{0.6, 3.480252}, {0.8, 3.671413}}) {
    Scenario s = base;
    s.alpha_i = alpha;
    const double b = SpectrumAuction(s.market(), s.auction()).optimal_bid(Mno::kI);
    c.expect(std::abs(b - expected) <= 1e-4, fmt("b_i*(alpha=%.1f, c_A=2) = %.10f vs %.6f", alpha, b, expected));
  }
  return c.report(seconds_since(start));
}

// 6. Signs of the deployment-time slopes.
bool deployment_slope_signs() {
  Criterion c(6, "central differences: d r_A/d T1 > 0 and d r_B/d T1 < 0 on the sweep parameter sets");
  const auto start = Clock::now();
  double min_a = std::numeric_limits<double>::infinity();
  double max_b = -std::numeric_limits<double>::infinity();
  int n = 0;
  for (const char* name : {"fig5", "fig6", "fig7"}) {
    const Scenario s = find_preset(name).scenario;
    std::vector<MarketParams> markets{s.market()};
    if (s.sweep->axis == SweepAxis::kEta || s.sweep->axis == SweepAxis::kT1) {
      for (double v : s.sweep->values()) markets.push_back(s.at_axis(s.sweep->axis, v).market());
    }
    for (const MarketParams& m : markets) {
      try {
        const DeploymentSlopes d = deployment_slopes(m);
        min_a = std::min(min_a, d.d_ra_dt1);
        max_b = std::max(max_b, d.d_rb_dt1);
        ++n;
      } catch (const std::domain_error& e) {
        c.expect(false, std::string(name) + ": " + e.what());
      }
    }
  }
  c.expect(min_a > 0.0, fmt("%g markets, min d r_A/d T1 = %.4e", n, min_a));
  c.expect(max_b < 0.0, fmt("max d r_B/d T1 = %.4e", max_b));
  return c.report(seconds_since(start));
}

// 7. The premium operator always charges more.
bool price_ordering() {
  Criterion c(7, "p_i > p_j at every sampled t for eta > 0; iteration from p_i < p_j ends with p_i > p_j");
  const auto start = Clock::now();
  double min_gap = std::numeric_limits<double>::infinity();
  for (const MarketParams& m : preset_markets_with_sweeps()) {
    if (m.eta() <= 0.0) continue;
    for (int k = 0; k <= 2000; ++k) {
      const PricePair p = eq_prices(m, m.t2() * k / 2000.0);
      min_gap = std::min(min_gap, p.p_i - p.p_j);
    }
    const PricePair right = EquilibriumPricePath::for_phase(m, Phase::kSymmetric).at(m.t1());
    min_gap = std::min(min_gap, right.p_i - right.p_j);
  }
  c.expect(min_gap > 0.0, fmt("min p_i - p_j = %.4e", min_gap));

  for (const char* name : {"fig3a", "fig3b"}) {
    const MarketParams m = find_preset(name).scenario.market();
    const double t = 5.0;
    const double base = m.cost_ceiling(t);
    try {
      const NashSolution s = nash_by_iteration(Phase::kSymmetric, m, t, GridSpec::prices(m, t, 1e-5),
                                               PricePair{0.5 * base, 1.5 * base});
      c.expect(s.prices.p_i > s.prices.p_j,
               std::string(name) + fmt(" start (%.4f, %.4f) -> (%.6f, ", 0.5 * base, 1.5 * base, s.prices.p_i) +
                   fmt("%.6f)", s.prices.p_j));
    } catch (const OracleFailure& e) {
      c.expect(false, std::string(name) + ": " + e.what());
    }
  }
  return c.report(seconds_since(start));
}

// 8. Crossover spite coefficient and the fair reserve.
bool crossover_consistency() {
  Criterion c(8, "crossover alpha* = 0.483530 (c_A=2) and 0.840440 (c_A=1) within 1e-6; fair reserve inverts (1e-6); profit-gain signs");
  const auto start = Clock::now();
  const Scenario base = find_preset("fig6").scenario;
  for (auto [c_a, expected] : {std::pair{2.0, 0.483530}, {1.0, 0.840440}}) {
    Scenario s = base;
    s.c_a = c_a;
    const SpectrumAuction a(s.market(), s.auction());
    const std::optional<double> alpha = a.crossover_alpha();
    if (!alpha) {
      c.expect(false, fmt("c_A=%g: no crossover in [0, 1]", c_a));
      continue;
    }
    c.expect(std::abs(*alpha - expected) <= 1e-6,
             fmt("c_A=%g: alpha* = %.10f vs %.6f", c_a, *alpha, expected) +
                 fmt(" (|diff| = %.2e)", std::abs(*alpha - expected)));
    c.note(fmt("c_A=%g: closed-form alpha* = %.10f, |bisection - closed form| = %.2e", c_a,
               a.crossover_alpha_closed_form(), std::abs(*alpha - a.crossover_alpha_closed_form())));
    const std::optional<double> reserve = a.fair_reserve(*alpha);
    c.expect(reserve && std::abs(*reserve - c_a) <= 1e-6,
             fmt("fair_reserve(alpha*) = %.10f vs c_A = %g", reserve.value_or(NAN), c_a));
    const std::optional<double> from_literal = a.fair_reserve(expected);
    c.note(fmt("fair_reserve(%.6f) = %.10f", expected, from_literal.value_or(NAN)));
  }
  for (auto [c_a, above] : {std::pair{1.0, true}, {2.0, false}}) {
    Scenario s = base;
    s.c_a = c_a;
    s.alpha_i = 0.6;
    const auto rho = SpectrumAuction(s.market(), s.auction()).settle().rho_gain;
    c.expect(rho && (above ? *rho > 1.0 : *rho < 1.0),
             fmt("rho_gain(alpha_i=0.6, c_A=%g) = %.6f ", c_a, rho.value_or(NAN)) +
                 (above ? "> 1" : "< 1"));
  }
  return c.report(seconds_since(start));
}

// 9. Byte-identical reruns of the series and sweep writers.
bool determinism() {
  Criterion c(9, "repeated series and sweep runs produce byte-identical CSV");
  const auto start = Clock::now();
  for (const Preset& p : presets()) {
    const auto run = [&] {
      std::ostringstream out;
      if (p.scenario.sweep) {
        write_sweep(p.scenario, out);
      } else {
        write_series(p.scenario, out);
      }
      return out.str();
    };
    const std::string first = run();
    const std::string second = run();
    c.expect(!first.empty() && first == second,
             std::string(p.name) + fmt(" %g bytes", static_cast<double>(first.size())));
  }
  return c.report(seconds_since(start));
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<std::function<bool()>> criteria{
      closed_form_vs_oracle_nash, revenue_integrals, phase_boundary_drop,
      monte_carlo_churn,          bid_optimality,    deployment_slope_signs,
      price_ordering,             crossover_consistency, determinism};
  int failed = 0;
  for (const auto& run : criteria) {
    try {
      if (!run()) ++failed;
    } catch (const std::exception& e) {
      std::printf("[FAIL] unexpected exception: %s\n", e.what());
      ++failed;
    }
  }
  std::printf("%d/%d criteria passed in %.2f s\n",
              static_cast<int>(criteria.size()) - failed,
              static_cast<int>(criteria.size()), seconds_since(start));
  return failed == 0 ? 0 : 1;
}
