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


#ifndef REGCAP_SIMULATOR_HPP_
#define REGCAP_SIMULATOR_HPP_

// Real-time replay of 2-second regulation signals against an offer and a
// realized fleet envelope, plus scoring and settlement.

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "regcap/market.hpp"
#include "regcap/signals.hpp"

namespace regcap::simulator {

// Realized aggregate envelope for one hour. Powers are resource side (kW);
// energies are cumulative resource energy (kWh) relative to the start of
// the horizon. The admissible energy band moves linearly from the start
// values to the end-of-hour values across the hour; NaN start values mean
// a band fixed at the end-of-hour values.
struct HourEnvelope {
  double p_plus = 0.0;
  double p_minus = 0.0;
  double e_minus = 0.0;
  double e_plus = 0.0;
  double e_minus_start = std::numeric_limits<double>::quiet_NaN();
  double e_plus_start = std::numeric_limits<double>::quiet_NaN();

  double band_lo(double fraction) const;
  double band_hi(double fraction) const;
};

// Throws Error(kValidation) on p_plus < 0, p_minus > 0 or e_minus > e_plus.
void validate(const HourEnvelope& env);

struct Offer {
  double r = 0.0;  // regulation capacity, kW
  double p = 0.0;  // grid baseline, kW
};

struct DispatchResult {
  // per-step traces (filled only when requested)
  std::vector<double> instructed;
  std::vector<double> achieved;
  std::vector<double> grid_power;
  std::vector<double> energy;

  bool regulated = false;      // r > 0
  double score_raw = 1.0;      // unclamped precision score
  double score = 1.0;          // clamped to [0, 1]
  int clamped_steps = 0;
  bool start_outside_band = false;
  double e_start = 0.0;
  double e_end = 0.0;
  double energy_increment_sum = 0.0;  // pairwise sum of step increments
  double grid_energy = 0.0;           // kWh drawn from the grid
  double discharged_energy = 0.0;     // resource-side kWh discharged
};

// Grid-power interval [lo, hi] admissible for one step: the power limits
// intersected with the interval that keeps the post-step energy in
// [e_lo, e_hi]. When the two do not intersect the power limits win and the
// interval collapses to the power bound nearest the energy interval.
struct Interval {
  double lo;
  double hi;
};
Interval feasible_grid_power(const HourEnvelope& env, double energy,
                             double e_lo, double e_hi, double step_hours,
                             double eta_c, double eta_d);

// Resource energy change (kWh) of holding grid power y for step_hours.
inline double energy_increment(double y, double step_hours, double eta_c,
                               double eta_d) {
  return (y >= 0.0 ? eta_c * y : y / eta_d) * step_hours;
}

DispatchResult dispatch(const Offer& offer,
                        const signals::SignalTrajectory& traj,
                        const HourEnvelope& env, double e_start, double eta_c,
                        double eta_d, bool record_steps = false);

// 1 - mean|s - s_r| / mean|s|; 1 when every instructed sample is zero.
double performance_score(std::span<const double> instructed,
                         std::span<const double> achieved);

inline double clamp_score(double s) { return std::min(1.0, std::max(0.0, s)); }

using regcap::HourPrices;

struct ExpectedComponents {
  double regulation_revenue = 0.0;
  double energy_cost = 0.0;
  double degradation_cost = 0.0;

  double total() const {
    return regulation_revenue - energy_cost - degradation_cost;
  }
};

struct HourRecord {
  int hour = 0;
  Offer offer;             // hour-ahead capacity and baseline
  double p_da = 0.0;       // day-ahead baseline
  double mileage = 0.0;    // realized signal mileage
  HourPrices prices;
  ExpectedComponents expected;
  DispatchResult dispatch;
};

struct HourSettlement {
  int hour = 0;
  double r = 0.0;
  double score = 1.0;
  bool regulated = false;
  bool violated = false;
  double regulation_revenue = 0.0;  // (c_rc + c_rp m) R
  double cost_der = 0.0;            // c_e_rt |P_ha - P_da| * 1 h
  double cost_d = 0.0;              // c_d * discharged resource energy
  double actual_revenue = 0.0;      // S Rev_R - Cost_der - Cost_D
  double expected_revenue = 0.0;
};

std::vector<HourSettlement> settle(std::span<const HourRecord> hours,
                                   double c_d);

struct DaySummary {
  double offer_mwh = 0.0;
  double mean_score = 1.0;  // over regulated hours; 1 if none
  double actual_revenue = 0.0;
  double expected_revenue = 0.0;
  int regulated_hours = 0;
  int violated_hours = 0;
};

DaySummary summarize(std::span<const HourSettlement> hours);

}  // namespace regcap::simulator

#endif  // REGCAP_SIMULATOR_HPP_
