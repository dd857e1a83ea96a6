// Copyright 2026 The regcap Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "regcap/hourahead.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/grid_oracle.hpp"
#include "oracles/random_instances.hpp"
#include "regcap/error.hpp"

namespace regcap::hourahead {
namespace {

using oracle::HourAheadInstance;

HourAheadOptions no_future() {
  HourAheadOptions o;
  o.future_block = false;
  return o;
}

HourAheadProblem build(const HourAheadInstance& in, double eps,
                       const HourAheadOptions& o = no_future()) {
  return build_hourahead(in.da, 0, in.prices, in.scenarios, in.stats,
                         in.forecast, eps, in.eta_c, in.eta_d, o);
}

void expect_valid(const HourAheadProblem& prob, const HourAheadSolution& s) {
  EXPECT_GE(s.r, 0.0);
  EXPECT_LE(s.r, prob.r_da);
  EXPECT_NEAR(s.dp, std::fabs(s.p - prob.p_da), 1e-7);
  EXPECT_GE((prob.p_da >= 0.0 ? 1.0 : -1.0) * s.p, 0.0);
  for (const Cone& c : prob.cones) EXPECT_LE(c.value(s.r, s.p), 1e-6);
}

TEST(Cones, ZeroCovarianceIsLinear) {
  uncertainty::MomentData m;
  m.dbar[0] = {1.0, 2.0, -3.0};
  const Cones cones = build_cones(m, 0.1, 0.05);
  EXPECT_DOUBLE_EQ(cones[0].value(2.0, 0.5), 2.0 + 1.0 - 3.0);
}

TEST(Cones, HalfToleranceKappas) {
  const Cones cones = build_cones(uncertainty::MomentData{}, 0.5, 0.5);
  EXPECT_DOUBLE_EQ(cones[0].kappa, 1.0);
  EXPECT_DOUBLE_EQ(cones[1].kappa, 1.0);
  EXPECT_NEAR(cones[2].kappa, 0.0, 1e-12);
  EXPECT_NEAR(cones[3].kappa, 0.0, 1e-12);
}

TEST(Cones, HandComputedValue) {
  uncertainty::MomentData m;
  m.dbar[2] = {0.4, -0.9, 12.0};
  m.gamma_diag[2] = {0.25, 0.0, 16.0};
  const Cones cones = build_cones(m, 0.2, 0.1);
  const double kappa = uncertainty::gaussian_quantile(0.9);
  const double r = 30.0, p = 20.0;
  const double expected =
      kappa * std::sqrt(0.25 * r * r + 16.0) + 0.4 * r - 0.9 * p + 12.0;
  EXPECT_NEAR(cones[2].value(r, p), expected, 1e-12);
  const Vec3 g = cones[2].gradient(r, p);
  const double h = 1e-6;
  EXPECT_NEAR(g[0], (cones[2].value(r + h, p) - cones[2].value(r - h, p)) / (2 * h), 1e-6);
  EXPECT_NEAR(g[1], (cones[2].value(r, p + h) - cones[2].value(r, p - h)) / (2 * h), 1e-6);
}

TEST(Cones, RejectsNegativeVarianceAndBadEps) {
  uncertainty::MomentData m;
  m.gamma_diag[1] = {-1.0, 0.0, 0.0};
  EXPECT_THROW(build_cones(m, 0.2, 0.2), Error);
  EXPECT_THROW(build_cones(uncertainty::MomentData{}, 0.6, 0.2), Error);
  EXPECT_THROW(build_cones(uncertainty::MomentData{}, 0.0, 0.0), Error);
}

// maximize R subject to kappa sigma R + a R <= b
TEST(HourAhead, OneDimensionalClosedForm) {
  std::mt19937_64 rng(1);
  HourAheadInstance in = oracle::random_hourahead_instance(rng);
  in.prices.hours[0] = HourPrices{0.0, 0.0, 1.0, 0.0};
  in.prices.c_d = 0.0;
  in.da.r_da = {1e6};
  in.da.p_da = {0.0};
  uncertainty::MomentData m;
  Cones cones;
  for (Cone& c : cones) c.dbar = {0.0, 0.0, -1.0};
  const double kappa = 2.0, sigma = 0.5, a = 1.0, b = 10.0;
  cones[0].kappa = kappa;
  cones[0].gamma = {sigma * sigma, 0.0, 0.0};
  cones[0].dbar = {a, 0.0, -b};
  const HourAheadProblem prob =
      build_problem(in.da, 0, in.prices, in.scenarios, m, cones, 0.0, 0.0,
                    0.9, 0.9, no_future());
  const HourAheadSolution s = solve_hourahead(prob);
  EXPECT_TRUE(s.converged);
  EXPECT_NEAR(s.r, b / (kappa * sigma + a), 1e-6);
}

TEST(HourAhead, LinearConesNeedOneRound) {
  std::mt19937_64 rng(2);
  const HourAheadInstance in = oracle::random_hourahead_instance(rng);
  const HourAheadSolution s = deterministic_offer(
      in.da, 0, in.prices, in.scenarios, in.stats, in.forecast, in.eta_c,
      in.eta_d, no_future());
  EXPECT_EQ(s.rounds, 1);
  EXPECT_TRUE(s.converged);
}

TEST(HourAhead, MatchesGridOracle) {
  std::mt19937_64 rng(7);
  int compared = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const HourAheadInstance in = oracle::random_hourahead_instance(rng);
    const HourAheadProblem prob = build(in, 0.2);
    const oracle::GridResult g = oracle::grid_search(prob, 400);
    if (!g.feasible) continue;
    ++compared;
    const HourAheadSolution s = solve_hourahead(prob);
    expect_valid(prob, s);
    const double scale = std::max(1.0, std::fabs(g.objective));
    EXPECT_GE(s.objective, g.objective - 1e-6 * scale) << "trial " << trial;
    EXPECT_NEAR(s.objective, g.objective, 1e-3 * scale) << "trial " << trial;
  }
  EXPECT_GE(compared, 5);
}

TEST(HourAhead, ObjectiveNondecreasingInEps) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 4; ++trial) {
    const HourAheadInstance in = oracle::random_hourahead_instance(rng);
    double prev = -1e300;
    for (int k = 1; k <= 10; ++k) {
      const HourAheadSolution s = solve_or_zero(build(in, 0.05 * k));
      if (s.infeasible) continue;
      EXPECT_GE(s.objective, prev - 1e-6 * std::max(1.0, std::fabs(prev)));
      prev = s.objective;
    }
  }
}

TEST(HourAhead, EnergyCheckpointsOnlyTighten) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const HourAheadInstance in = oracle::random_hourahead_instance(rng);
    HourAheadOptions o = no_future();
    const HourAheadProblem base = build(in, 0.2, o);
    EXPECT_TRUE(base.checkpoint_cones.empty());
    o.energy_checkpoints = 3;
    const HourAheadProblem cp = build(in, 0.2, o);
    ASSERT_EQ(cp.checkpoint_cones.size(), 6u);
    const HourAheadSolution a = solve_or_zero(base);
    const HourAheadSolution b = solve_or_zero(cp);
    if (b.infeasible) continue;
    expect_valid(cp, b);
    for (const Cone& c : cp.checkpoint_cones)
      EXPECT_LE(c.value(b.r, b.p), 1e-6);
    EXPECT_LE(b.checkpoint_max, 1e-6);
    if (!a.infeasible)
      EXPECT_LE(b.objective, a.objective + 1e-6 * std::max(1.0, std::fabs(a.objective)));
  }
}

TEST(HourAhead, StrategyOfferOrdering) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    const HourAheadInstance in = oracle::random_hourahead_instance(rng);
    const auto o = no_future();
    const HourAheadSolution rob = robust_offer(
        in.da, 0, in.prices, in.scenarios, in.stats, in.forecast, in.eta_c,
        in.eta_d, o);
    const HourAheadSolution pro =
        offer(Strategy::kProposed, in.da, 0, in.prices, in.scenarios,
              in.stats, in.forecast, 0.2, in.eta_c, in.eta_d, o);
    const HourAheadSolution det =
        offer(Strategy::kDeterm, in.da, 0, in.prices, in.scenarios, in.stats,
              in.forecast, 0.2, in.eta_c, in.eta_d, o);
    EXPECT_LE(rob.r, pro.r + 1e-6) << "trial " << trial;
    EXPECT_LE(pro.r, det.r + 1e-6) << "trial " << trial;
  }
}

TEST(HourAhead, ZeroDayAheadCapacityForcesZero) {
  std::mt19937_64 rng(4);
  HourAheadInstance in = oracle::random_hourahead_instance(rng);
  in.da.r_da = {0.0};
  const HourAheadProblem prob = build(in, 0.2);
  const HourAheadSolution s = solve_hourahead(prob);
  EXPECT_EQ(s.r, 0.0);
  expect_valid(prob, s);
}

TEST(HourAhead, NoRobustnessEqualsDeterministic) {
  std::mt19937_64 rng(5);
  HourAheadInstance in = oracle::random_hourahead_instance(rng);
  in.stats.rho = 0.0;
  in.stats.var_s1 = in.stats.var_sH = 0.0;
  in.forecast.var_p_plus = in.forecast.var_p_minus = 0.0;
  in.forecast.var_e_plus = in.forecast.var_e_minus = in.forecast.var_e0 = 0.0;
  const HourAheadSolution pro = solve_hourahead(build(in, 0.5));
  const HourAheadSolution det =
      deterministic_offer(in.da, 0, in.prices, in.scenarios, in.stats,
                          in.forecast, in.eta_c, in.eta_d, no_future());
  EXPECT_NEAR(pro.r, det.r, 1e-6);
  EXPECT_NEAR(pro.objective, det.objective, 1e-6);
}

TEST(HourAhead, IgnoreEfficiencyEqualsProposedWhenLossless) {
  std::mt19937_64 rng(6);
  const HourAheadInstance in = oracle::random_hourahead_instance(rng);
  const HourAheadSolution pro =
      proposed_offer(in.da, 0, in.prices, in.scenarios, in.stats,
                     in.forecast, 0.2, 1.0, 1.0, no_future());
  const HourAheadSolution ign =
      ignore_efficiency_offer(in.da, 0, in.prices, in.scenarios, in.stats,
                              in.forecast, 0.2, no_future());
  EXPECT_NEAR(pro.r, ign.r, 1e-9);
  EXPECT_NEAR(pro.p, ign.p, 1e-9);
}

TEST(HourAhead, TightEnergyBandGivesRobustZero) {
  std::mt19937_64 rng(9);
  HourAheadInstance in = oracle::random_hourahead_instance(rng);
  in.forecast.mean_e_plus = in.forecast.mean_e_minus + 1.0;
  in.forecast.mean_e0 = in.forecast.mean_e_minus + 0.5;
  in.forecast.min_e0 = in.forecast.mean_e0 - 20.0;
  in.forecast.max_e0 = in.forecast.mean_e0 + 20.0;
  const HourAheadSolution rob =
      robust_offer(in.da, 0, in.prices, in.scenarios, in.stats, in.forecast,
                   in.eta_c, in.eta_d, no_future());
  EXPECT_EQ(rob.r, 0.0);
}

TEST(HourAhead, GaussianViolationWithinTolerance) {
  std::mt19937_64 rng(31);
  const HourAheadInstance in = oracle::random_hourahead_instance(rng);
  const double eps = 0.2;
  const HourAheadProblem prob = build(in, eps);
  const HourAheadSolution s = solve_hourahead(prob);
  const double x[3] = {s.r, s.p, 1.0};
  std::normal_distribution<double> z(0.0, 1.0);
  const int draws = 20000;
  const double margin = 3.0 * std::sqrt(eps * (1.0 - eps) / draws);
  for (int j = 0; j < 4; ++j) {
    int violated = 0;
    for (int k = 0; k < draws; ++k) {
      double v = 0.0;
      for (int i = 0; i < 3; ++i)
        v += (prob.moments.dbar[j][i] +
              std::sqrt(prob.moments.gamma_diag[j][i]) * z(rng)) * x[i];
      if (v > 0.0) ++violated;
    }
    EXPECT_LE(static_cast<double>(violated) / draws, eps + margin) << "j=" << j;
  }
}

TEST(HourAhead, FutureBlockSolves) {
  std::mt19937_64 rng(77);
  const oracle::DayAheadInstance day =
      oracle::random_dayahead_instance(rng, 6, 3);
  const dayahead::DayAheadSolution da = dayahead::solve_dayahead(
      dayahead::build_dayahead(day.prices, day.scenarios, day.eta_c,
                               day.eta_d, 6));
  const HourAheadInstance in = oracle::random_hourahead_instance(rng);
  for (int t = 0; t < 5; ++t) {
    uncertainty::HourForecast fc =
        uncertainty::forecast_from_scenarios(day.scenarios, t, 0.05);
    const double prev = t == 0 ? 0.0 : da.cells[0][t - 1].energy;
    fc.mean_e0 = prev;
    fc.min_e0 = fc.max_e0 = prev;
    for (bool all : {false, true}) {
      HourAheadOptions o;
      o.future_all_scenarios = all;
      const HourAheadSolution s =
          offer(Strategy::kProposed, da, t, day.prices, day.scenarios,
                in.stats, fc, 0.2, day.eta_c, day.eta_d, o);
      EXPECT_TRUE(std::isfinite(s.future_value));
      EXPECT_LE(s.r, da.r_da[t] + 1e-9);
      if (!s.infeasible)
        for (double g : s.cone_values) EXPECT_LE(g, 1e-6);
    }
  }
}

TEST(HourAhead, InfeasibleReportsMostViolatedCone) {
  std::mt19937_64 rng(3);
  HourAheadInstance in = oracle::random_hourahead_instance(rng);
  in.forecast.mean_e0 = in.forecast.mean_e_plus + 5000.0;
  const HourAheadProblem prob = build(in, 0.2);
  try {
    solve_hourahead(prob);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSolver);
    EXPECT_NE(std::string(e.what()).find("j="), std::string::npos);
  }
  const HourAheadSolution z = solve_or_zero(prob);
  EXPECT_TRUE(z.infeasible);
  EXPECT_EQ(z.r, 0.0);
}

TEST(HourAhead, StrategyNames) {
  for (Strategy s : {Strategy::kProposed, Strategy::kRobust,
                     Strategy::kDeterm, Strategy::kIgnoreEffi})
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_EQ(parse_strategy("robust"), Strategy::kRobust);
  EXPECT_THROW(parse_strategy("greedy"), Error);
}

}  // namespace
}  // namespace regcap::hourahead
