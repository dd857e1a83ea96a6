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


#ifndef REGCAP_SCENARIO_HPP_
#define REGCAP_SCENARIO_HPP_

// Fleet scenarios shared by the day-ahead and hour-ahead models.

#include <vector>

namespace regcap {

struct ScenarioHour {
  // aggregate signal model of the hour
  double s_up = 0.0;
  double s_dn = 0.0;
  double dt_up = 1.0;  // hours
  double dt_dn = 0.0;  // hours
  double mileage = 0.0;
  // capacity envelope: powers in kW, cumulative energies in kWh
  double p_plus = 0.0;
  double p_minus = 0.0;
  double e_minus = 0.0;
  double e_plus = 0.0;
};

struct FleetScenario {
  double probability = 1.0;
  std::vector<ScenarioHour> hours;
};

struct FleetScenarioSet {
  std::vector<FleetScenario> scenarios;

  int horizon() const {
    return scenarios.empty() ? 0 : static_cast<int>(scenarios[0].hours.size());
  }
  int size() const { return static_cast<int>(scenarios.size()); }

  // Throws Error(kValidation): probabilities must sum to 1 (1e-9), every
  // scenario must cover the same horizon, p_plus >= 0 >= p_minus,
  // e_minus <= e_plus, dt_up + dt_dn = 1 and s_up >= 0 >= s_dn.
  void validate() const;
};

}  // namespace regcap

#endif  // REGCAP_SCENARIO_HPP_
