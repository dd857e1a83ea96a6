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


#include "oracles/dayahead_enum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "oracles/tableau_simplex.hpp"
#include "regcap/solver.hpp"

namespace regcap::oracle {
namespace {

using solver::RowEntry;
using solver::RowSense;

// Affine form over columns.
using Affine = std::vector<RowEntry>;

void add(Affine& a, int col, double v) { a.push_back({col, v}); }

}  // namespace

EnumResult enumerate_dayahead(const MarketPrices& prices,
                              const FleetScenarioSet& scen, double eta_c,
                              double eta_d, int horizon,
                              bool skip_dominated) {
  const int cells = scen.size() * horizon;
  double max_plus = 0.0, min_minus = 0.0;
  for (const auto& sc : scen.scenarios)
    for (int t = 0; t < horizon; ++t) {
      max_plus = std::max(max_plus, sc.hours[t].p_plus);
      min_minus = std::min(min_minus, sc.hours[t].p_minus);
    }
  const double r_cap = max_plus + std::fabs(min_minus);

  EnumResult best;
  best.objective = -std::numeric_limits<double>::infinity();
  const long total = 1L << (2 * cells);
  for (long pattern = 0; pattern < total; ++pattern) {
    bool dominated = false;
    for (int c = 0; c < cells && skip_dominated; ++c) {
      const bool up = (pattern >> (2 * c)) & 1;
      const bool dn = (pattern >> (2 * c + 1)) & 1;
      if (!up && dn) dominated = true;
    }
    if (dominated) continue;

    solver::LinearProgram lp;
    lp.sense = solver::Sense::kMaximize;
    std::vector<int> p(horizon);
    for (int t = 0; t < horizon; ++t)
      p[t] = lp.add_column(-solver::kInfinity, solver::kInfinity,
                           -prices.hours[t].c_e_da);
    for (int w = 0; w < scen.size(); ++w) {
      const FleetScenario& sc = scen.scenarios[w];
      Affine cumulative;
      for (int t = 0; t < horizon; ++t) {
        const ScenarioHour& h = sc.hours[t];
        const HourPrices& hp = prices.hours[t];
        const int r = lp.add_column(
            0.0, r_cap, sc.probability * (hp.c_rc + hp.c_rp * h.mileage));
        const int c = w * horizon + t;
        const double s[2] = {h.s_up, h.s_dn};
        const double dt[2] = {h.dt_up, h.dt_dn};
        for (int k = 0; k < 2; ++k) {
          const bool discharging = (pattern >> (2 * c + k)) & 1;
          // y = P - s R
          if (!discharging) {
            // Pc = eta_c y in [0, p+]
            const RowEntry row[] = {{p[t], eta_c}, {r, -eta_c * s[k]}};
            lp.add_row(row, RowSense::kGreaterEqual, 0.0);
            lp.add_row(row, RowSense::kLessEqual, h.p_plus);
            add(cumulative, p[t], dt[k] * eta_c);
            add(cumulative, r, -dt[k] * eta_c * s[k]);
          } else {
            // Pd = y / eta_d in [p-, 0]
            const RowEntry row[] = {{p[t], 1.0 / eta_d}, {r, -s[k] / eta_d}};
            lp.add_row(row, RowSense::kLessEqual, 0.0);
            lp.add_row(row, RowSense::kGreaterEqual, h.p_minus);
            add(cumulative, p[t], dt[k] / eta_d);
            add(cumulative, r, -dt[k] * s[k] / eta_d);
            const double deg = sc.probability * prices.c_d * dt[k] / eta_d;
            lp.objective[p[t]] += deg;
            lp.objective[r] -= deg * s[k];
          }
        }
        lp.add_row(cumulative, RowSense::kGreaterEqual, h.e_minus);
        lp.add_row(cumulative, RowSense::kLessEqual, h.e_plus);
      }
    }
    const TableauResult res = tableau_solve(lp);
    ++best.patterns;
    if (res.status == TableauResult::Status::kOptimal &&
        res.objective > best.objective) {
      best.objective = res.objective;
      best.feasible = true;
    }
  }
  return best;
}

}  // namespace regcap::oracle
