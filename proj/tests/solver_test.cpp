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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/tableau_simplex.hpp"
#include "regcap/error.hpp"
#include "regcap/solver.hpp"

namespace regcap::solver {
namespace {

using oracle::TableauResult;

LinearProgram random_lp(std::mt19937_64& rng, int m, int n, bool maximize) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.0, 10.0);
  LinearProgram lp;
  lp.sense = maximize ? Sense::kMaximize : Sense::kMinimize;
  std::vector<double> x0(n);
  for (int j = 0; j < n; ++j) {
    const int kind = static_cast<int>(rng() % 6);
    double lo = 0.0, hi = 10.0;
    if (kind == 0) lo = -5.0;
    if (kind == 1) hi = kInfinity;
    if (kind == 2) { lo = -kInfinity; hi = 4.0; }
    lp.add_column(lo, hi, u(rng));
    x0[j] = std::clamp(pos(rng) - 2.0, std::max(lo, -5.0), std::min(hi, 10.0));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<RowEntry> row;
    double act = 0.0;
    for (int j = 0; j < n; ++j) {
      if (rng() % 3 == 0) continue;
      const double a = u(rng);
      row.push_back({j, a});
      act += a * x0[j];
    }
    const int s = static_cast<int>(rng() % 5);
    if (s == 0)
      lp.add_row(row, RowSense::kEqual, act);
    else if (s < 3)
      lp.add_row(row, RowSense::kLessEqual, act + pos(rng) * 0.3);
    else
      lp.add_row(row, RowSense::kGreaterEqual, act - pos(rng) * 0.3);
  }
  return lp;
}

void expect_weak_duality(const LinearProgram& lp, const LpResult& r) {
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  if (lp.sense == Sense::kMaximize)
    EXPECT_LE(r.objective, r.dual_objective + 1e-7);
  else
    EXPECT_GE(r.objective, r.dual_objective - 1e-7);
  EXPECT_NEAR(r.objective, r.dual_objective, 1e-6 * (1 + std::abs(r.objective)));
}

TEST(SolveLp, MaximizeSingleBound) {
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.add_column(-kInfinity, kInfinity, 1.0, "x");
  RowEntry e{0, 1.0};
  lp.add_row({&e, 1}, RowSense::kLessEqual, 3.0);
  LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.x[0], 3.0, 1e-12);
  EXPECT_NEAR(r.objective, 3.0, 1e-12);
  EXPECT_NEAR(r.row_duals[0], 1.0, 1e-12);
}

TEST(SolveLp, InfeasiblePairGivesCertificate) {
  LinearProgram lp;
  lp.add_column(-kInfinity, kInfinity, 0.0, "x");
  RowEntry e{0, 1.0};
  lp.add_row({&e, 1}, RowSense::kLessEqual, 0.0);
  lp.add_row({&e, 1}, RowSense::kGreaterEqual, 1.0);
  LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kInfeasible);
  EXPECT_GT(r.infeasibility, 0.5);
  ASSERT_EQ(r.farkas.size(), 2u);
  // The multipliers combine the rows into 0 * x <= negative number.
  double coef = r.farkas[0] + r.farkas[1];
  EXPECT_NEAR(coef, 0.0, 1e-12);
  EXPECT_NE(r.farkas[0], 0.0);
}

TEST(SolveLp, UnboundedReturnsRay) {
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.add_column(0.0, kInfinity, 1.0);
  lp.add_column(0.0, kInfinity, 1.0);
  RowEntry row[] = {{0, 1.0}, {1, -1.0}};
  lp.add_row(row, RowSense::kLessEqual, 2.0);
  LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kUnbounded);
  ASSERT_EQ(r.ray.size(), 2u);
  EXPECT_GT(r.ray[0] + r.ray[1], 0.0);
  EXPECT_LE(r.ray[0] - r.ray[1], 1e-12);
  EXPECT_GE(r.ray[0], -1e-12);
  EXPECT_GE(r.ray[1], -1e-12);
}

TEST(SolveLp, EqualityAndFreeColumns) {
  // min |x - 3| written with an epigraph
  LinearProgram lp;
  int x = lp.add_column(-kInfinity, kInfinity, 0.0);
  int t = lp.add_column(-kInfinity, kInfinity, 1.0);
  RowEntry a[] = {{t, 1.0}, {x, -1.0}};
  RowEntry b[] = {{t, 1.0}, {x, 1.0}};
  RowEntry c[] = {{x, 1.0}};
  lp.add_row(a, RowSense::kGreaterEqual, -3.0);
  lp.add_row(b, RowSense::kGreaterEqual, 3.0);
  lp.add_row(c, RowSense::kEqual, 5.0);
  LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.x[x], 5.0, 1e-12);
  EXPECT_NEAR(r.objective, 2.0, 1e-12);
}

TEST(SolveLp, RandomDenseMatchesTableauOracle) {
  std::mt19937_64 rng(7);
  int optimal = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LinearProgram lp = random_lp(rng, 20, 30, trial % 2 == 0);
    LpResult r = solve_lp(lp);
    TableauResult o = oracle::tableau_solve(lp);
    switch (o.status) {
      case TableauResult::Status::kOptimal:
        ASSERT_EQ(r.status, LpStatus::kOptimal) << "trial " << trial;
        EXPECT_NEAR(r.objective, o.objective, 1e-7) << "trial " << trial;
        EXPECT_LE(lp.max_violation(r.x), 1e-8);
        expect_weak_duality(lp, r);
        ++optimal;
        break;
      case TableauResult::Status::kUnbounded:
        EXPECT_EQ(r.status, LpStatus::kUnbounded) << "trial " << trial;
        break;
      case TableauResult::Status::kInfeasible:
        EXPECT_EQ(r.status, LpStatus::kInfeasible) << "trial " << trial;
        break;
    }
  }
  EXPECT_GT(optimal, 30);
}

TEST(SolveLp, DegenerateProblemTerminates) {
  // many copies of the same facet through the optimum
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  for (int j = 0; j < 6; ++j) lp.add_column(0.0, kInfinity, 1.0 + 0.1 * j);
  for (int k = 0; k < 40; ++k) {
    std::vector<RowEntry> row;
    for (int j = 0; j < 6; ++j) row.push_back({j, 1.0 + (k % 3 == 0 ? 0 : 0.0)});
    lp.add_row(row, RowSense::kLessEqual, 1.0);
  }
  LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 1.5, 1e-12);
}

TEST(SolveLp, Deterministic) {
  std::mt19937_64 rng(11);
  LinearProgram lp = random_lp(rng, 15, 25, true);
  LpResult a = solve_lp(lp);
  LpResult b = solve_lp(lp);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(SolveLp, RejectsBadModel) {
  LinearProgram lp;
  lp.add_column(1.0, 0.0, 0.0);
  EXPECT_THROW(solve_lp(lp), Error);
}

TEST(AddCut, RedundantCutKeepsOptimum) {
  std::mt19937_64 rng(3);
  LinearProgram lp = random_lp(rng, 10, 12, true);
  SimplexSolver s(lp);
  LpResult r0 = s.solve();
  ASSERT_EQ(r0.status, LpStatus::kOptimal);
  RowEntry e{0, 1.0};
  s.add_cut({&e, 1}, 1e6);
  LpResult r1 = s.solve();
  ASSERT_EQ(r1.status, LpStatus::kOptimal);
  EXPECT_NEAR(r0.objective, r1.objective, 1e-9);
}

TEST(AddCut, ViolatedCutLowersMaximum) {
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.add_column(0.0, 4.0, 1.0);
  lp.add_column(0.0, 4.0, 1.0);
  SimplexSolver s(lp);
  LpResult r0 = s.solve();
  ASSERT_EQ(r0.status, LpStatus::kOptimal);
  EXPECT_NEAR(r0.objective, 8.0, 1e-12);
  RowEntry cut[] = {{0, 1.0}, {1, 2.0}};
  s.add_cut(cut, 6.0);
  LpResult r1 = s.solve();
  ASSERT_EQ(r1.status, LpStatus::kOptimal);
  EXPECT_LT(r1.objective, r0.objective - 1e-6);
  EXPECT_NEAR(r1.objective, 5.0, 1e-9);
}

TEST(AddCut, SequentialCutsMatchColdSolve) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LinearProgram lp = random_lp(rng, 12, 15, true);
  SimplexSolver warm(lp);
  LpResult r = warm.solve();
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  LinearProgram cold = lp;
  for (int k = 0; k < 50; ++k) {
    std::vector<RowEntry> row;
    double act = 0.0;
    for (int j = 0; j < lp.num_columns(); ++j) {
      const double a = u(rng);
      row.push_back({j, a});
      act += a * r.x[j];
    }
    // cut off the current point by a small margin
    const double rhs = act - 0.05 * std::abs(act) - 0.01;
    warm.add_cut(row, rhs);
    cold.add_row(row, RowSense::kLessEqual, rhs);
    r = warm.solve();
    LpResult c = solve_lp(cold);
    ASSERT_EQ(r.status, c.status) << "cut " << k;
    if (c.status != LpStatus::kOptimal) break;
    EXPECT_NEAR(r.objective, c.objective, 1e-8) << "cut " << k;
  }
}

TEST(AddCut, RejectsBadColumn) {
  LinearProgram lp;
  lp.add_column(0.0, 1.0, 1.0);
  SimplexSolver s(lp);
  RowEntry e{3, 1.0};
  EXPECT_THROW(s.add_cut({&e, 1}, 1.0), Error);
}

TEST(Bounds, WarmBoundChangeMatchesColdSolve) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    LinearProgram lp = random_lp(rng, 10, 14, trial % 2);
    SimplexSolver s(lp);
    LpResult r = s.solve();
    if (r.status != LpStatus::kOptimal) continue;
    const int j = static_cast<int>(rng() % lp.num_columns());
    const double v = r.x[j];
    s.set_column_bounds(j, v + 0.5, v + 0.5);
    lp.lower[j] = lp.upper[j] = v + 0.5;
    LpResult w = s.solve();
    TableauResult o = oracle::tableau_solve(lp);
    if (o.status == TableauResult::Status::kOptimal) {
      ASSERT_EQ(w.status, LpStatus::kOptimal);
      EXPECT_NEAR(w.objective, o.objective, 1e-7);
    } else if (o.status == TableauResult::Status::kInfeasible) {
      EXPECT_EQ(w.status, LpStatus::kInfeasible);
    }
  }
}

MixedIntegerProgram random_mip(std::mt19937_64& rng, int nbin, int ncont) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.1, 1.0);
  MixedIntegerProgram mip;
  LinearProgram& lp = mip.lp;
  lp.sense = Sense::kMaximize;
  for (int k = 0; k < nbin; ++k) {
    mip.binaries.push_back(lp.add_column(0.0, 1.0, 2.0 * u(rng) + 0.5));
  }
  for (int k = 0; k < ncont; ++k) lp.add_column(0.0, 3.0, u(rng));
  const int n = lp.num_columns();
  for (int i = 0; i < 8; ++i) {
    std::vector<RowEntry> row;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = pos(rng) * (rng() % 4 == 0 ? -1.0 : 1.0);
      row.push_back({j, a});
      sum += std::abs(a);
    }
    lp.add_row(row, RowSense::kLessEqual, 0.35 * sum);
  }
  return mip;
}

double enumerate_mip(const MixedIntegerProgram& mip, bool& feasible) {
  const int nb = static_cast<int>(mip.binaries.size());
  double best = -kInfinity;
  feasible = false;
  for (long mask = 0; mask < (1L << nb); ++mask) {
    LinearProgram lp = mip.lp;
    for (int k = 0; k < nb; ++k) {
      const double v = (mask >> k) & 1;
      lp.lower[mip.binaries[k]] = lp.upper[mip.binaries[k]] = v;
    }
    TableauResult o = oracle::tableau_solve(lp);
    if (o.status != TableauResult::Status::kOptimal) continue;
    feasible = true;
    best = std::max(best, o.objective);
  }
  return best;
}

TEST(SolveMilp, TwoBinaryKnapsack) {
  MixedIntegerProgram mip;
  mip.lp.sense = Sense::kMaximize;
  mip.binaries.push_back(mip.lp.add_column(0, 1, 5.0));
  mip.binaries.push_back(mip.lp.add_column(0, 1, 4.0));
  RowEntry row[] = {{0, 3.0}, {1, 2.0}};
  mip.lp.add_row(row, RowSense::kLessEqual, 4.0);
  MilpResult r = solve_milp(mip);
  ASSERT_EQ(r.status, MilpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 5.0, 1e-12);
  EXPECT_NEAR(r.x[0], 1.0, 0.0);
  EXPECT_NEAR(r.x[1], 0.0, 0.0);
}

TEST(SolveMilp, IntegralRelaxationNeedsOneNode) {
  MixedIntegerProgram mip;
  mip.lp.sense = Sense::kMaximize;
  mip.binaries.push_back(mip.lp.add_column(0, 1, 1.0));
  mip.binaries.push_back(mip.lp.add_column(0, 1, 1.0));
  RowEntry row[] = {{0, 1.0}, {1, 1.0}};
  mip.lp.add_row(row, RowSense::kLessEqual, 2.0);
  MilpResult r = solve_milp(mip);
  ASSERT_EQ(r.status, MilpStatus::kOptimal);
  EXPECT_EQ(r.nodes, 1);
  EXPECT_NEAR(r.objective, 2.0, 1e-12);
}

TEST(SolveMilp, InfeasibleModel) {
  MixedIntegerProgram mip;
  mip.binaries.push_back(mip.lp.add_column(0, 1, 1.0));
  RowEntry e{0, 1.0};
  mip.lp.add_row({&e, 1}, RowSense::kGreaterEqual, 0.3);
  mip.lp.add_row({&e, 1}, RowSense::kLessEqual, 0.7);
  MilpResult r = solve_milp(mip);
  EXPECT_EQ(r.status, MilpStatus::kInfeasible);
}

TEST(SolveMilp, TwelveBinariesMatchEnumeration) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    MixedIntegerProgram mip = random_mip(rng, 12, 3);
    bool feasible = false;
    const double best = enumerate_mip(mip, feasible);
    MilpResult r = solve_milp(mip);
    if (!feasible) {
      EXPECT_EQ(r.status, MilpStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(r.status, MilpStatus::kOptimal);
    EXPECT_NEAR(r.objective, best, 1e-6 * std::max(1.0, std::abs(best)))
        << "trial " << trial;
    EXPECT_LE(mip.lp.max_violation(r.x), 1e-7);
    for (double b : r.bound_trace) EXPECT_GE(b, r.objective - 1e-6);
    for (size_t k = 1; k < r.bound_trace.size(); ++k)
      EXPECT_LE(r.bound_trace[k], r.bound_trace[k - 1] + 1e-9);
  }
}

TEST(SolveMilp, RejectsBadBinaryIndex) {
  MixedIntegerProgram mip;
  mip.lp.add_column(0, 1, 1.0);
  mip.binaries.push_back(4);
  EXPECT_THROW(solve_milp(mip), Error);
}

TEST(LpFormat, ExportsSections) {
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.add_column(0.0, 1.0, 2.0, "a");
  lp.add_column(-kInfinity, kInfinity, -1.0, "b");
  RowEntry row[] = {{0, 1.0}, {1, -3.0}};
  lp.add_row(row, RowSense::kLessEqual, 4.0, "c1");
  const int bins[] = {0};
  const std::string text = to_lp_format(lp, bins);
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("obj: 2 a - b"), std::string::npos);
  EXPECT_NE(text.find("c1: a - 3 b <= 4"), std::string::npos);
  EXPECT_NE(text.find("b free"), std::string::npos);
  EXPECT_NE(text.find("Binaries\n a"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
}

}  // namespace
}  // namespace regcap::solver
