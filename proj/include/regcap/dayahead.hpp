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


#ifndef REGCAP_DAYAHEAD_HPP_
#define REGCAP_DAYAHEAD_HPP_

// Day-ahead two-stage stochastic offer model.

#include <vector>

#include "regcap/market.hpp"
#include "regcap/scenario.hpp"
#include "regcap/solver.hpp"

namespace regcap::dayahead {

inline constexpr double kTieBreakWeight = 1e-9;

// Columns of one (scenario, hour) cell.
struct CellColumns {
  int r = -1;
  int pc_up = -1, pc_dn = -1;
  int pd_up = -1, pd_dn = -1;
  int d_up = -1, d_dn = -1;
  int energy = -1;  // cumulative energy at the end of the hour
  int slack_lo = -1, slack_hi = -1;  // soft energy bounds only
};

// Scenario constraints for hours [t_begin, t_end): power balance, mode
// limits and cumulative energy. Used by both the day-ahead model and the
// hour-ahead future block.
struct BlockSpec {
  int t_begin = 0;
  int t_end = 0;
  std::vector<int> p_cols;               // per hour of the block
  std::vector<std::vector<int>> r_cols;  // [scenario][hour of the block]
  double eta_c = 1.0;
  double eta_d = 1.0;
  double c_d = 0.0;
  double initial_energy = 0.0;
  bool binary_modes = true;
  // First hour: no power or energy limits, only the mode split that prices
  // degradation. Its energy still carries into later hours.
  bool free_first_hour = false;
  // Whether the first hour's discharge is charged c_d (off when another
  // block already prices it).
  bool first_hour_degradation = true;
  // Energy bounds become penalized slacks ($/kWh, probability weighted).
  bool soft_energy = false;
  double energy_penalty = 0.0;
};

// Appends the block to lp (maximization) including the expected degradation
// cost. Mode columns are pushed to binaries when binary_modes is set.
std::vector<std::vector<CellColumns>> add_scenario_block(
    solver::LinearProgram& lp, const FleetScenarioSet& scen,
    const BlockSpec& spec, std::vector<int>* binaries);

struct DayAheadModel {
  solver::MixedIntegerProgram mip;
  MarketPrices prices;
  FleetScenarioSet scenarios;
  double eta_c = 1.0;
  double eta_d = 1.0;
  std::vector<int> p_cols;
  std::vector<int> rda_cols;
  std::vector<std::vector<CellColumns>> cells;  // [scenario][hour]
};

struct CellDecision {
  double r = 0.0;
  double pc_up = 0.0, pc_dn = 0.0;
  double pd_up = 0.0, pd_dn = 0.0;
  double d_up = 0.0, d_dn = 0.0;
  double discharged = 0.0;  // kWh
  double energy = 0.0;      // cumulative kWh at the end of the hour
};

struct DayAheadSolution {
  std::vector<double> p_da;  // kW
  std::vector<double> r_da;  // kW
  std::vector<std::vector<CellDecision>> cells;  // [scenario][hour]
  double objective = 0.0;
  double regulation_revenue = 0.0;
  double energy_cost = 0.0;
  double degradation_cost = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  long nodes = 0;

  int horizon() const { return static_cast<int>(p_da.size()); }
};

// Throws Error(kValidation) on bad prices, envelopes or efficiencies, or
// when horizon exceeds the data.
DayAheadModel build_dayahead(const MarketPrices& prices,
                             const FleetScenarioSet& scen, double eta_c,
                             double eta_d, int horizon);

// Throws Error(kSolver) when the model is infeasible, unbounded (message
// carries the relaxation ray) or the node limit is hit without incumbent.
DayAheadSolution solve_dayahead(const DayAheadModel& model,
                                const solver::MilpOptions& options = {});

}  // namespace regcap::dayahead

#endif  // REGCAP_DAYAHEAD_HPP_
