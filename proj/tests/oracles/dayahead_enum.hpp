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


#ifndef REGCAP_TESTS_ORACLES_DAYAHEAD_ENUM_HPP_
#define REGCAP_TESTS_ORACLES_DAYAHEAD_ENUM_HPP_

#include "regcap/market.hpp"
#include "regcap/scenario.hpp"

namespace regcap::oracle {

struct EnumResult {
  bool feasible = false;
  double objective = 0.0;
  long patterns = 0;  // reduced LPs solved
};

// Optimum of the day-ahead model by enumerating every charge/discharge mode
// pattern. With modes fixed, flows are affine in (P, R) and the rest is a
// small LP solved by the tableau oracle. skip_dominated drops the
// (up charging, down discharging) pattern, whose feasible set is the single
// point of zero flow and is covered by (charging, charging).
EnumResult enumerate_dayahead(const MarketPrices& prices,
                              const FleetScenarioSet& scen, double eta_c,
                              double eta_d, int horizon,
                              bool skip_dominated);

}  // namespace regcap::oracle

#endif  // REGCAP_TESTS_ORACLES_DAYAHEAD_ENUM_HPP_
