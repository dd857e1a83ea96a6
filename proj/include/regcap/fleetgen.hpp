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


#ifndef REGCAP_FLEETGEN_HPP_
#define REGCAP_FLEETGEN_HPP_

// Synthetic plug-in electric vehicle fleet and its hourly aggregate
// envelopes.
//
// Each vehicle i plugs in at a_i and leaves at b_i (hours from the start of
// the horizon, truncated Gaussians at +-3 sigma), with rated power p_i,
// room to charge cap_i = B - s0_i and a departure need req_i. With tau the
// end of an hour:
//
//   e+(tau) = sum_i min(p_i (tau - a_i)+, cap_i)        charge at once
//   e-(tau) = sum_i max(0, req_i - p_i (b_i - tau)+)    charge at the end
//   p+(t)   = sum_i p_i * |[t, t+1] ^ [a_i, b_i]|         p- = -p+
//
// Every level is then scaled by an independent (1 + noise_std z) factor,
// cumulative curves are made nondecreasing by a running maximum and
// e- is capped at e+.

#include <cstdint>
#include <vector>

#include "regcap/scenario.hpp"
#include "regcap/simulator.hpp"

namespace regcap::fleetgen {

struct FleetConfig {
  int n_vehicles = 5000;
  double battery_kwh = 24.0;
  double fraction_low_power = 0.5;
  double low_power_kw = 3.3;
  double high_power_kw = 6.6;
  double eta = 0.92;
  double c_d = 4.1 / 24.0;          // $/kWh discharged
  double start_hour = 12.0;         // clock hour of horizon hour 0
  double arrival_mean = 18.0;       // clock hours
  double arrival_std = 2.0;
  double departure_mean = 31.0;     // clock hours, may exceed 24
  double departure_std = 1.5;
  double trip_kwh_mean = 8.0;
  double trip_kwh_std = 3.0;
  double departure_soc = 0.9;
  double noise_std = 0.05;          // relative

  void validate() const;
};

struct Vehicle {
  double arrival = 0.0;    // hours from horizon start
  double departure = 0.0;
  double power_kw = 0.0;
  double room_kwh = 0.0;   // energy that can be added
  double need_kwh = 0.0;   // energy that must be added by departure
};

std::vector<Vehicle> sample_vehicles(const FleetConfig& cfg,
                                     std::uint64_t seed);

// Noise-free hourly envelope of a vehicle population.
std::vector<ScenarioHour> aggregate_envelope(const std::vector<Vehicle>& fleet,
                                             int horizon);

// Scenario w uses seed + w. Signal fields are left at a flat hour
// (s_up = s_dn = 0, dt_up = 1); callers attach signal aggregates.
FleetScenarioSet generate_scenarios(const FleetConfig& cfg, int n_scenarios,
                                    int horizon, std::uint64_t seed);

// One draw from the same model, used as simulator ground truth.
FleetScenario realize_fleet(const FleetConfig& cfg, int horizon,
                            std::uint64_t seed);

// Envelopes with each hour's start band equal to the previous hour's end
// band (zero before the first hour).
std::vector<simulator::HourEnvelope> to_envelopes(const FleetScenario& sc);

}  // namespace regcap::fleetgen

#endif  // REGCAP_FLEETGEN_HPP_
