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


#ifndef REGCAP_HOURAHEAD_HPP_
#define REGCAP_HOURAHEAD_HPP_

// Hour-ahead offer problem: linear master model plus four second-order
// cone constraints, solved by outer linearization.

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "regcap/dayahead.hpp"
#include "regcap/market.hpp"
#include "regcap/scenario.hpp"
#include "regcap/uncertainty.hpp"

namespace regcap::hourahead {

using uncertainty::Vec3;

inline constexpr double kConeTolerance = 1e-6;
inline constexpr int kMaxCutRounds = 200;

enum class Strategy { kProposed, kRobust, kDeterm, kIgnoreEffi };

const char* to_string(Strategy s);
// Throws Error(kArgument) on an unknown name.
Strategy parse_strategy(const std::string& name);

// kappa * ||sqrt(gamma) .* X|| + dbar' X <= 0 over X = [R, P, 1].
struct Cone {
  double kappa = 0.0;
  Vec3 dbar{};
  Vec3 gamma{};

  double value(double r, double p) const;
  // Gradient over X; the norm term contributes nothing at its kink.
  Vec3 gradient(double r, double p) const;
};

using Cones = std::array<Cone, 4>;

// Throws Error(kValidation) on negative variances or eps outside (0, 0.5].
Cones build_cones(const uncertainty::MomentData& moments, double eps,
                  double eps_prime);

struct HourAheadOptions {
  bool future_block = true;
  // Future hours use one probability-weighted mean scenario unless set.
  bool future_all_scenarios = false;
  double future_energy_penalty = 1.0;  // $/kWh outside the energy band
  int max_rounds = kMaxCutRounds;
  double tolerance = kConeTolerance;
  // eta^2 instead of eta scalings on the signal variances
  bool squared_scaling = false;
  // Extra energy cones at fractions i/(k+1) of the hour, i = 1..k. The
  // partial-hour signal average takes the 2-second variance (an upper
  // bound) and the band is interpolated from the previous hour's end.
  int energy_checkpoints = 0;
};

struct HourAheadProblem {
  int hour = 0;
  Strategy strategy = Strategy::kProposed;
  double eps = 0.5;
  double eps_prime = 0.5;
  double rho = 0.0;
  uncertainty::MomentData moments;
  Cones cones;
  std::vector<Cone> checkpoint_cones;  // see energy_checkpoints
  double p_da = 0.0;
  double r_da = 0.0;
  HourPrices prices;
  double c_d = 0.0;
  double mean_mileage = 0.0;
  double eta_c = 1.0;
  double eta_d = 1.0;
  HourAheadOptions options;

  solver::LinearProgram master;
  int col_r = -1;
  int col_p = -1;
  int col_dp = -1;
  std::vector<double> scenario_probability;
  std::vector<dayahead::CellColumns> current;  // hour-t cell per scenario
  std::vector<ScenarioHour> current_hours;
  double p_lo = 0.0;  // sign-consistent box on P
  double p_hi = 0.0;
  // Cone values at R = 0, P = P_da.
  std::array<double, 4> at_schedule{};
};

struct HourAheadSolution {
  int hour = 0;
  Strategy strategy = Strategy::kProposed;
  double r = 0.0;   // kW
  double p = 0.0;   // kW
  double dp = 0.0;  // kW
  std::vector<double> expected_discharge;  // kWh per scenario
  double objective = 0.0;  // hour-t terms only
  double regulation_revenue = 0.0;
  double deviation_cost = 0.0;
  double degradation_cost = 0.0;
  double future_value = 0.0;
  std::array<double, 4> cone_values{};  // g_j, <= 0 when satisfied
  double checkpoint_max = -std::numeric_limits<double>::infinity();
  double eps = 0.5;
  double eps_prime = 0.5;
  double rho = 0.0;
  int rounds = 0;
  bool converged = false;
  // R shrunk toward 0 after the round limit.
  bool shrunk = false;
  // No feasible point: R = 0 and P minimizes the largest cone value.
  bool infeasible = false;
};

// General builder used by every strategy.
HourAheadProblem build_problem(const dayahead::DayAheadSolution& da, int t,
                               const MarketPrices& prices,
                               const FleetScenarioSet& scen,
                               const uncertainty::MomentData& moments,
                               const Cones& cones, double mean_mileage,
                               double e0, double eta_c, double eta_d,
                               const HourAheadOptions& options = {});

HourAheadProblem build_hourahead(const dayahead::DayAheadSolution& da, int t,
                                 const MarketPrices& prices,
                                 const FleetScenarioSet& scen,
                                 const uncertainty::SignalStatistics& stats,
                                 const uncertainty::HourForecast& fc,
                                 double eps, double eta_c, double eta_d,
                                 const HourAheadOptions& options = {});

// Throws Error(kSolver) naming the most violated cone when the master is
// infeasible.
HourAheadSolution solve_hourahead(const HourAheadProblem& prob);

// R = 0 and the P in the sign-consistent box minimizing the largest cone
// value.
HourAheadSolution zero_offer(const HourAheadProblem& prob);

HourAheadSolution proposed_offer(const dayahead::DayAheadSolution& da, int t,
                                 const MarketPrices& prices,
                                 const FleetScenarioSet& scen,
                                 const uncertainty::SignalStatistics& stats,
                                 const uncertainty::HourForecast& fc,
                                 double eps, double eta_c, double eta_d,
                                 const HourAheadOptions& options = {});

// Worst case moments: s1 = +-1 per constraint, the hourly average at its
// empirical extreme, capacities at mean -+ 3 sigma and e0 at its extremes.
uncertainty::MomentData worst_case_moments(
    const uncertainty::SignalStatistics& stats,
    const uncertainty::HourForecast& fc, int sign_da, double eta_c,
    double eta_d);

HourAheadSolution robust_offer(const dayahead::DayAheadSolution& da, int t,
                               const MarketPrices& prices,
                               const FleetScenarioSet& scen,
                               const uncertainty::SignalStatistics& stats,
                               const uncertainty::HourForecast& fc,
                               double eta_c, double eta_d,
                               const HourAheadOptions& options = {});

HourAheadSolution deterministic_offer(
    const dayahead::DayAheadSolution& da, int t, const MarketPrices& prices,
    const FleetScenarioSet& scen, const uncertainty::SignalStatistics& stats,
    const uncertainty::HourForecast& fc, double eta_c, double eta_d,
    const HourAheadOptions& options = {});

// Proposed model with eta_c = eta_d = 1.
HourAheadSolution ignore_efficiency_offer(
    const dayahead::DayAheadSolution& da, int t, const MarketPrices& prices,
    const FleetScenarioSet& scen, const uncertainty::SignalStatistics& stats,
    const uncertainty::HourForecast& fc, double eps,
    const HourAheadOptions& options = {});

HourAheadProblem build_strategy(Strategy strategy,
                                const dayahead::DayAheadSolution& da, int t,
                                const MarketPrices& prices,
                                const FleetScenarioSet& scen,
                                const uncertainty::SignalStatistics& stats,
                                const uncertainty::HourForecast& fc,
                                double eps, double eta_c, double eta_d,
                                const HourAheadOptions& options = {});

// solve_hourahead, falling back to zero_offer when the problem is
// infeasible.
HourAheadSolution solve_or_zero(const HourAheadProblem& prob);

// Any strategy; infeasible problems fall back to zero_offer.
HourAheadSolution offer(Strategy strategy,
                        const dayahead::DayAheadSolution& da, int t,
                        const MarketPrices& prices,
                        const FleetScenarioSet& scen,
                        const uncertainty::SignalStatistics& stats,
                        const uncertainty::HourForecast& fc, double eps,
                        double eta_c, double eta_d,
                        const HourAheadOptions& options = {});

// Single scenario holding probability-weighted averages of every field.
FleetScenarioSet mean_scenario(const FleetScenarioSet& scen);

}  // namespace regcap::hourahead

#endif  // REGCAP_HOURAHEAD_HPP_
