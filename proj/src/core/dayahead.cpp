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


#include "regcap/dayahead.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "regcap/error.hpp"

namespace regcap::dayahead {
namespace {

using solver::kInfinity;
using solver::RowEntry;
using solver::RowSense;

std::string cell_name(const char* what, int w, int t) {
  return std::string(what) + "_" + std::to_string(w) + "_" + std::to_string(t);
}

void check_efficiency(double eta_c, double eta_d) {
  if (!(eta_c > 0.0 && eta_c <= 1.0) || !(eta_d > 0.0 && eta_d <= 1.0))
    throw_validation("efficiencies must lie in (0, 1]");
}

}  // namespace

std::vector<std::vector<CellColumns>> add_scenario_block(
    solver::LinearProgram& lp, const FleetScenarioSet& scen,
    const BlockSpec& spec, std::vector<int>* binaries) {
  const int hours = spec.t_end - spec.t_begin;
  if (hours < 0 || spec.t_end > scen.horizon() ||
      static_cast<int>(spec.p_cols.size()) != hours ||
      static_cast<int>(spec.r_cols.size()) != scen.size())
    throw_argument("scenario block dimensions do not match");
  std::vector<std::vector<CellColumns>> cells(scen.size());
  for (int w = 0; w < scen.size(); ++w) {
    const FleetScenario& sc = scen.scenarios[w];
    if (static_cast<int>(spec.r_cols[w].size()) != hours)
      throw_argument("scenario block dimensions do not match");
    cells[w].resize(hours);
    int prev_energy = -1;
    for (int k = 0; k < hours; ++k) {
      const int t = spec.t_begin + k;
      const ScenarioHour& h = sc.hours[t];
      const bool free = spec.free_first_hour && k == 0;
      CellColumns& c = cells[w][k];
      c.r = spec.r_cols[w][k];
      const double deg = (k == 0 && !spec.first_hour_degradation)
                             ? 0.0
                             : sc.probability * spec.c_d;
      const double pc_hi = free ? kInfinity : h.p_plus;
      const double pd_lo = free ? -kInfinity : h.p_minus;
      c.pc_up = lp.add_column(0.0, pc_hi, 0.0, cell_name("pcu", w, t));
      c.pc_dn = lp.add_column(0.0, pc_hi, 0.0, cell_name("pcd", w, t));
      c.pd_up = lp.add_column(pd_lo, 0.0, deg * h.dt_up, cell_name("pdu", w, t));
      c.pd_dn = lp.add_column(pd_lo, 0.0, deg * h.dt_dn, cell_name("pdd", w, t));

      // P - s R = Pc / eta_c + eta_d Pd
      const double s[2] = {h.s_up, h.s_dn};
      const int pc[2] = {c.pc_up, c.pc_dn};
      const int pd[2] = {c.pd_up, c.pd_dn};
      for (int i = 0; i < 2; ++i) {
        const RowEntry row[] = {{spec.p_cols[k], 1.0},
                                {c.r, -s[i]},
                                {pc[i], -1.0 / spec.eta_c},
                                {pd[i], -spec.eta_d}};
        lp.add_row(row, RowSense::kEqual, 0.0,
                   cell_name(i == 0 ? "balu" : "bald", w, t));
      }
      if (!free) {
        c.d_up = lp.add_column(0.0, 1.0, 0.0, cell_name("du", w, t));
        c.d_dn = lp.add_column(0.0, 1.0, 0.0, cell_name("dd", w, t));
        const int d[2] = {c.d_up, c.d_dn};
        for (int i = 0; i < 2; ++i) {
          const RowEntry up[] = {{pc[i], 1.0}, {d[i], h.p_plus}};
          lp.add_row(up, RowSense::kLessEqual, h.p_plus);
          const RowEntry dn[] = {{pd[i], 1.0}, {d[i], -h.p_minus}};
          lp.add_row(dn, RowSense::kGreaterEqual, 0.0);
          if (spec.binary_modes && binaries) binaries->push_back(d[i]);
        }
      }

      const bool bounded = !free && !spec.soft_energy;
      c.energy = lp.add_column(bounded ? h.e_minus : -kInfinity,
                               bounded ? h.e_plus : kInfinity, 0.0,
                               cell_name("e", w, t));
      std::vector<RowEntry> bal = {{c.energy, 1.0},
                                   {c.pc_up, -h.dt_up},
                                   {c.pd_up, -h.dt_up},
                                   {c.pc_dn, -h.dt_dn},
                                   {c.pd_dn, -h.dt_dn}};
      double rhs = spec.initial_energy;
      if (prev_energy >= 0) {
        bal.push_back({prev_energy, -1.0});
        rhs = 0.0;
      }
      lp.add_row(bal, RowSense::kEqual, rhs, cell_name("ebal", w, t));
      prev_energy = c.energy;

      if (!free && spec.soft_energy) {
        const double pen = -sc.probability * spec.energy_penalty;
        c.slack_lo = lp.add_column(0.0, kInfinity, pen, cell_name("sl", w, t));
        c.slack_hi = lp.add_column(0.0, kInfinity, pen, cell_name("sh", w, t));
        const RowEntry lo[] = {{c.energy, 1.0}, {c.slack_lo, 1.0}};
        lp.add_row(lo, RowSense::kGreaterEqual, h.e_minus);
        const RowEntry hi[] = {{c.energy, 1.0}, {c.slack_hi, -1.0}};
        lp.add_row(hi, RowSense::kLessEqual, h.e_plus);
      }
    }
  }
  return cells;
}

DayAheadModel build_dayahead(const MarketPrices& prices,
                             const FleetScenarioSet& scen, double eta_c,
                             double eta_d, int horizon) {
  prices.validate();
  scen.validate();
  check_efficiency(eta_c, eta_d);
  if (horizon < 1) throw_validation("horizon must be at least one hour");
  if (horizon > scen.horizon() || horizon > prices.horizon())
    throw_validation("horizon exceeds scenario or price data");

  DayAheadModel m;
  m.prices = prices;
  m.scenarios = scen;
  m.eta_c = eta_c;
  m.eta_d = eta_d;
  solver::LinearProgram& lp = m.mip.lp;
  lp.sense = solver::Sense::kMaximize;

  double max_plus = 0.0, min_minus = 0.0;
  for (const FleetScenario& sc : scen.scenarios)
    for (int t = 0; t < horizon; ++t) {
      max_plus = std::max(max_plus, sc.hours[t].p_plus);
      min_minus = std::min(min_minus, sc.hours[t].p_minus);
    }
  const double r_cap = max_plus + std::fabs(min_minus);

  for (int t = 0; t < horizon; ++t) {
    m.p_cols.push_back(lp.add_column(-kInfinity, kInfinity,
                                     -prices.hours[t].c_e_da,
                                     "p_" + std::to_string(t)));
    m.rda_cols.push_back(lp.add_column(0.0, r_cap, -kTieBreakWeight,
                                       "rda_" + std::to_string(t)));
  }
  BlockSpec spec;
  spec.t_begin = 0;
  spec.t_end = horizon;
  spec.p_cols = m.p_cols;
  spec.eta_c = eta_c;
  spec.eta_d = eta_d;
  spec.c_d = prices.c_d;
  spec.r_cols.resize(scen.size());
  for (int w = 0; w < scen.size(); ++w) {
    const FleetScenario& sc = scen.scenarios[w];
    for (int t = 0; t < horizon; ++t) {
      const HourPrices& hp = prices.hours[t];
      const double value =
          sc.probability * (hp.c_rc + hp.c_rp * sc.hours[t].mileage);
      const int r = lp.add_column(0.0, r_cap, value - kTieBreakWeight,
                                  cell_name("r", w, t));
      spec.r_cols[w].push_back(r);
      const RowEntry epi[] = {{m.rda_cols[t], 1.0}, {r, -1.0}};
      lp.add_row(epi, RowSense::kGreaterEqual, 0.0,
                 cell_name("rmax", w, t));
    }
  }
  m.cells = add_scenario_block(lp, scen, spec, &m.mip.binaries);
  m.mip.validate();
  return m;
}

DayAheadSolution solve_dayahead(const DayAheadModel& model,
                                const solver::MilpOptions& options) {
  const solver::MilpResult res = solver::solve_milp(model.mip, options);
  switch (res.status) {
    case solver::MilpStatus::kOptimal:
      break;
    case solver::MilpStatus::kInfeasible:
      throw Error(ErrorKind::kSolver, "day-ahead model is infeasible");
    case solver::MilpStatus::kUnbounded: {
      const solver::LpResult relax = solver::solve_lp(model.mip.lp);
      std::ostringstream os;
      os << "day-ahead model is unbounded; ray:";
      for (std::size_t j = 0; j < relax.ray.size(); ++j)
        if (relax.ray[j] != 0.0)
          os << ' ' << model.mip.lp.column_names[j] << '=' << relax.ray[j];
      throw Error(ErrorKind::kSolver, os.str());
    }
    case solver::MilpStatus::kNodeLimit:
      if (res.x.empty())
        throw Error(ErrorKind::kSolver,
                    "day-ahead node limit reached without a solution");
      break;
  }
  // basic values may sit a rounding error outside their bounds
  const solver::LinearProgram& lp = model.mip.lp;
  std::vector<double> x = res.x;
  for (int j = 0; j < lp.num_columns(); ++j)
    x[j] = std::clamp(x[j], lp.lower[j], lp.upper[j]);
  const int horizon = static_cast<int>(model.p_cols.size());
  const FleetScenarioSet& scen = model.scenarios;
  DayAheadSolution sol;
  sol.bound = res.bound;
  sol.gap = res.gap;
  sol.nodes = res.nodes;
  sol.p_da.resize(horizon);
  sol.r_da.assign(horizon, 0.0);
  for (int t = 0; t < horizon; ++t) {
    sol.p_da[t] = x[model.p_cols[t]];
    sol.energy_cost += model.prices.hours[t].c_e_da * sol.p_da[t];
  }
  sol.cells.resize(scen.size());
  for (int w = 0; w < scen.size(); ++w) {
    const FleetScenario& sc = scen.scenarios[w];
    for (int t = 0; t < horizon; ++t) {
      const CellColumns& c = model.cells[w][t];
      const ScenarioHour& h = sc.hours[t];
      CellDecision d;
      d.r = x[c.r];
      d.pc_up = x[c.pc_up];
      d.pc_dn = x[c.pc_dn];
      d.pd_up = x[c.pd_up];
      d.pd_dn = x[c.pd_dn];
      d.d_up = x[c.d_up];
      d.d_dn = x[c.d_dn];
      d.discharged = -(h.dt_up * d.pd_up + h.dt_dn * d.pd_dn);
      d.energy = x[c.energy];
      sol.cells[w].push_back(d);
      sol.r_da[t] = std::max(sol.r_da[t], d.r);
      const HourPrices& hp = model.prices.hours[t];
      sol.regulation_revenue +=
          sc.probability * (hp.c_rc + hp.c_rp * h.mileage) * d.r;
      sol.degradation_cost +=
          sc.probability * model.prices.c_d * d.discharged;
    }
  }
  sol.objective =
      sol.regulation_revenue - sol.energy_cost - sol.degradation_cost;
  return sol;
}

}  // namespace regcap::dayahead
