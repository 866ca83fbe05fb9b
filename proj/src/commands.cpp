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

#include "spectrum/commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spectrum {
namespace {

void write_series_row(std::ostream& out, double t, const PricePair& p,
                      const SharePair& q, Phase phase) {
  out << format_number(t) << ',' << format_number(p.p_i) << ','
      << format_number(p.p_j) << ',' << format_number(q.q_i) << ','
      << format_number(q.q_j) << ',' << phase_name(phase) << '\n';
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::string churn_reason(const Scenario& s) {
  if (s.eta * s.u_o >= std::exp(-s.lambda * s.t1)) return "churn_constraint";
  return "market_params";
}

class ReportBuilder {
 public:
  explicit ReportBuilder(ValidationReport& report) : report_(report) {}

  // Passes when residual <= tolerance.
  void within(std::string name, double residual, double tolerance,
              std::string note = {}) {
    report_.checks.push_back({std::move(name), residual, tolerance,
                              std::isfinite(residual) && residual <= tolerance,
                              std::move(note)});
  }

  // Passes when value > 0; tolerance column reports the bound 0.
  void positive(std::string name, double value, std::string note = {}) {
    report_.checks.push_back(
        {std::move(name), value, 0.0, value > 0.0, std::move(note)});
  }

  void failed(std::string name, std::string note) {
    report_.checks.push_back({std::move(name),
                              std::numeric_limits<double>::quiet_NaN(), 0.0,
                              false, std::move(note)});
  }

 private:
  ValidationReport& report_;
};

std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  return text;
}

double max_abs_diff(const PricePair& a, const PricePair& b) {
  return std::max(std::abs(a.p_i - b.p_i), std::abs(a.p_j - b.p_j));
}

double rel_err(double approx, double exact) {
  return std::abs(approx - exact) / std::max(std::abs(exact), 1e-300);
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value, std::chars_format::fixed, 12);
  if (ec != std::errc()) return "nan";
  return {buf.data(), ptr};
}

void write_series(const Scenario& scenario, std::ostream& out) {
  scenario.validate();
  if (scenario.sweep) {
    throw std::invalid_argument("series takes no sweep axis (use sweep)");
  }
  const MarketParams market = scenario.market();
  const double t1 = market.t1();
  const double t2 = market.t2();
  const int n = scenario.time_samples;

  const auto boundary_rows = [&] {
    write_series_row(out, t1, eq_prices_asym(market, t1),
                     eq_shares(market, t1), Phase::kAsymmetric);
    const PricePair right =
        EquilibriumPricePath::for_phase(market, Phase::kSymmetric).at(t1);
    write_series_row(out, t1, right, eq_shares(market, t2), Phase::kSymmetric);
  };

  out << "t,p_i,p_j,q_i,q_j,phase\n";
  bool boundary_done = false;
  for (int k = 0; k < n; ++k) {
    const double t = k + 1 == n ? t2 : t2 * k / (n - 1);
    if (!boundary_done && t >= t1) {
      boundary_rows();
      boundary_done = true;
      if (t == t1) continue;
    }
    write_series_row(out, t, eq_prices(market, t), eq_shares(market, t),
                     market.phase_at(t));
  }
}

int write_sweep(const Scenario& scenario, std::ostream& out) {
  if (!scenario.sweep) {
    throw std::invalid_argument("sweep needs a sweep axis (sweep=<axis>:lo:hi:steps)");
  }
  scenario.validate();
  const SweepSpec& sweep = *scenario.sweep;

  out << axis_name(sweep.axis)
      << ",r_a,r_b,r_gain,b_i_star,pi_i,pi_j,rho_gain,status\n";
  int invalid = 0;
  for (const double value : sweep.values()) {
    const Scenario point = scenario.at_axis(sweep.axis, value);
    out << format_number(value) << ',';
    std::optional<MarketParams> market;
    try {
      market = point.market();
    } catch (const std::invalid_argument&) {
      out << ",,,,,,,invalid:" << churn_reason(point) << '\n';
      ++invalid;
      continue;
    }
    const SpectrumAuction auction(*market, point.auction());
    const RevenueReport& r = auction.revenue();
    out << format_number(r.r_a) << ',' << format_number(r.r_b) << ','
        << format_number(r.r_gain) << ',';
    if (!(point.c_a < r.r_a)) {
      out << ",,,,invalid:reserve_exceeds_value\n";
      ++invalid;
      continue;
    }
    const AuctionOutcome o = auction.settle();
    out << format_number(o.b_i) << ',' << format_number(o.pi_i) << ','
        << format_number(o.pi_j) << ',' << optional_number(o.rho_gain) << ','
        << (o.rho_gain ? "ok" : "invalid:rho_undefined") << '\n';
  }
  return invalid;
}

void write_auction_report(const Scenario& scenario, std::ostream& out,
                          bool quiet) {
  scenario.validate();
  const SpectrumAuction auction(scenario.market(), scenario.auction());
  const AuctionOutcome o = auction.settle();  // throws if c_A >= r_A
  const std::optional<double> alpha_star = auction.crossover_alpha();
  const std::optional<double> fair = auction.fair_reserve(scenario.alpha_i);

  if (!quiet) {
    const auto line = [&](std::string_view label, const std::string& value) {
      out << label;
      for (std::size_t pad = label.size(); pad < 22; ++pad) out << ' ';
      out << value << '\n';
    };
    line("r_A", format_number(auction.r_a()));
    line("r_B", format_number(auction.r_b()));
    line("pi_B", format_number(auction.pi_b()));
    line("b_i*", format_number(o.b_i));
    line("b_j*", format_number(o.b_j));
    line("winner", std::string(mno_name(o.winner)));
    line("pi_i", format_number(o.pi_i));
    line("pi_j", format_number(o.pi_j));
    line("rho_gain", o.rho_gain ? format_number(*o.rho_gain) : "undefined");
    line("crossover alpha*", alpha_star ? format_number(*alpha_star) : "none");
    line("fair c_A* at alpha_i", fair ? format_number(*fair) : "none");
    out << '\n';
  }
  out << "r_a,r_b,pi_b,b_i,b_j,winner,pi_i,pi_j,rho_gain,alpha_star,fair_c_a\n"
      << format_number(auction.r_a()) << ',' << format_number(auction.r_b())
      << ',' << format_number(auction.pi_b()) << ',' << format_number(o.b_i)
      << ',' << format_number(o.b_j) << ',' << mno_name(o.winner) << ','
      << format_number(o.pi_i) << ',' << format_number(o.pi_j) << ','
      << optional_number(o.rho_gain) << ',' << optional_number(alpha_star)
      << ',' << optional_number(fair) << '\n';
}

ClosedForms ClosedForms::standard() {
  return {
      [](const MarketParams& m, double t) { return eq_prices(m, t); },
      [](const MarketParams& m, double t) { return eq_shares(m, t); },
      [](const MarketParams& m) { return revenues(m); },
      [](const MarketParams& m) { return falling_price_levels(m); },
      [](const SpectrumAuction& a, Mno who) { return a.optimal_bid(who); },
  };
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport run_validation(const Scenario& scenario, const McConfig& mc,
                                double grid_step, const ClosedForms& forms) {
  scenario.validate();
  const MarketParams market = scenario.market();
  const double t1 = market.t1();
  const double t2 = market.t2();
  ValidationReport report;
  ReportBuilder check(report);
  const double nash_tol = std::max(1e-4, 2.0 * grid_step);

  // Fixed-point Nash equilibria and first-order conditions.
  SharePair locked{};
  try {
    locked = oracle_locked_in_shares(market, grid_step);
  } catch (const OracleFailure& e) {
    check.failed("nash locked-in shares", e.what());
  }
  const std::array<double, 6> nash_times{0.0, 0.5 * t1, t1,
                                         t1 + 0.25 * (t2 - t1),
                                         0.5 * (t1 + t2), t2};
  for (const double t : nash_times) {
    const Phase phase = market.phase_at(t);
    const std::string at = " t=" + format_number(t);
    const PricePair closed = forms.prices(market, t);
    try {
      const NashSolution sol = nash_by_iteration(
          phase, market, t, GridSpec::prices(market, t, grid_step),
          std::nullopt, locked);
      check.within("nash fixed point" + at, max_abs_diff(sol.prices, closed),
                   nash_tol,
                   std::to_string(sol.iterations) + " best-response rounds");
    } catch (const OracleFailure& e) {
      check.failed("nash fixed point" + at, e.what());
    }
    const FocResiduals foc = foc_residuals(market, t, closed);
    check.within("first-order conditions" + at,
                 std::max(std::abs(foc.d_i), std::abs(foc.d_j)), 1e-9);
  }

  // Price ordering, and iteration started from the wrong ordering.
  if (market.eta() > 0.0) {
    double min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 200; ++k) {
      const PricePair p = forms.prices(market, t2 * k / 200.0);
      min_gap = std::min(min_gap, p.p_i - p.p_j);
    }
    check.positive("price ordering p_i > p_j (min gap)", min_gap);

    const double t = 0.5 * (t1 + t2);
    const double base = market.cost_ceiling(t);
    try {
      const NashSolution sol = nash_by_iteration(
          Phase::kSymmetric, market, t, GridSpec::prices(market, t, grid_step),
          PricePair{0.5 * base, 1.5 * base}, locked);
      check.positive("iteration from p_i < p_j ends with p_i > p_j",
                     sol.prices.p_i - sol.prices.p_j);
    } catch (const OracleFailure& e) {
      check.failed("iteration from p_i < p_j ends with p_i > p_j", e.what());
    }
  }

  // Revenue integrals.
  const RevenueReport closed_rev = forms.revenue(market);
  try {
    const RevenuePair asym = quad_revenue(Phase::kAsymmetric, market);
    const RevenuePair sym = quad_revenue(Phase::kSymmetric, market);
    check.within("quadrature r_i asymmetric", rel_err(asym.r_i, closed_rev.r_i_asym), 1e-6);
    check.within("quadrature r_j asymmetric", rel_err(asym.r_j, closed_rev.r_j_asym), 1e-6);
    check.within("quadrature r_i symmetric", rel_err(sym.r_i, closed_rev.r_i_sym), 1e-6);
    check.within("quadrature r_j symmetric", rel_err(sym.r_j, closed_rev.r_j_sym), 1e-6);
  } catch (const OracleFailure& e) {
    check.failed("quadrature", e.what());
  }

  // Price drop at T1 against the two price paths.
  {
    const FallingPriceLevels phi = forms.drops(market);
    const PricePair left = forms.prices(market, t1);
    const PricePair right =
        EquilibriumPricePath::for_phase(market, Phase::kSymmetric).at(t1);
    check.within("falling price levels",
                 std::max(std::abs(phi.phi_i - (left.p_i - right.p_i)),
                          std::abs(phi.phi_j - (left.p_j - right.p_j))),
                 1e-12);
  }

  // Monte Carlo shares.
  const PricePair boundary_prices = forms.prices(market, t1);
  for (const double t : nash_times) {
    const SharePair expected = forms.shares(market, t);
    const SharePair sim =
        mc_shares(market, t, forms.prices(market, t), mc, boundary_prices);
    const double sigma = std::sqrt(expected.q_i * (1.0 - expected.q_i) /
                                   static_cast<double>(mc.n_users));
    check.within("monte carlo share t=" + format_number(t),
                 std::abs(sim.q_i - expected.q_i), 3.0 * sigma);
  }

  // Deployment-time slopes.
  if (market.eta() > 0.0) {
    const double h = 1e-4 * t1;
    try {
      const double d_a = finite_diff(
          [&](double x) { return forms.revenue(market.with_t1(x)).r_a; }, t1, h);
      const double d_b = finite_diff(
          [&](double x) { return forms.revenue(market.with_t1(x)).r_b; }, t1, h);
      check.positive("d r_A / d T1 > 0", d_a);
      check.positive("d r_B / d T1 < 0", -d_b);
    } catch (const std::domain_error& e) {
      check.failed("deployment-time slopes", e.what());
    }
  }

  // Auction stage.
  const SpectrumAuction auction(market, scenario.auction());
  if (!(scenario.c_a < auction.r_a())) {
    check.failed("auction", "c_A >= r_A; bidding checks skipped");
    return report;
  }
  const GridSpec bid_grid = GridSpec::bids(auction, 1e-4);
  for (const Mno who : {Mno::kI, Mno::kJ}) {
    check.within("grid-optimal bid " + std::string(mno_name(who)),
                 std::abs(grid_optimal_bid(auction, who, bid_grid) -
                          forms.bid(auction, who)),
                 bid_grid.step * (1.0 + 1e-9));
  }
  if (const auto alpha_star = auction.crossover_alpha()) {
    const auto gain = auction.winner_profit_gain(*alpha_star);
    check.within("profit gain at crossover alpha*", std::abs(*gain - 1.0), 1e-9);
    const auto reserve = auction.fair_reserve(*alpha_star);
    if (reserve) {
      check.within("fair reserve inverts crossover",
                   std::abs(*reserve - scenario.c_a), 1e-6);
    } else {
      check.failed("fair reserve inverts crossover", "no reserve found");
    }
  }
  return report;
}

void write_validation(const ValidationReport& report, std::ostream& out) {
  out << "status,check,residual,tolerance,note\n";
  for (const ValidationCheck& c : report.checks) {
    out << (c.passed ? "PASS" : "FAIL") << ',' << c.name << ','
        << (std::isfinite(c.residual) ? format_number(c.residual) : "nan")
        << ',' << format_number(c.tolerance) << ',' << csv_safe(c.note) << '\n';
  }
}

void write_presets(std::ostream& out) {
  out << "name,description\n";
  for (const Preset& p : presets()) {
    out << p.name << ',' << p.description << '\n';
  }
}

}  // namespace spectrum
