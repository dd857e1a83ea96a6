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


#ifndef REGCAP_MARKET_HPP_
#define REGCAP_MARKET_HPP_

#include <vector>

namespace regcap {

struct HourPrices {
  double c_e_da = 0.0;  // day-ahead energy, $/kWh
  double c_e_rt = 0.0;  // real-time energy, $/kWh
  double c_rc = 0.0;    // regulation capacity, $/kW per hour
  double c_rp = 0.0;    // regulation performance, $/kW per unit mileage
};

struct MarketPrices {
  std::vector<HourPrices> hours;
  double c_d = 0.0;  // degradation, $/kWh discharged

  int horizon() const { return static_cast<int>(hours.size()); }
  // Throws Error(kValidation) on non-finite prices or c_d < 0.
  void validate() const;
};

}  // namespace regcap

#endif  // REGCAP_MARKET_HPP_
