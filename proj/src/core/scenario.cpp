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


#include "regcap/scenario.hpp"

#include <cmath>
#include <string>

#include "regcap/error.hpp"
#include "regcap/market.hpp"

namespace regcap {

void FleetScenarioSet::validate() const {
  if (scenarios.empty()) throw_validation("scenario set is empty");
  const int h = horizon();
  if (h < 1) throw_validation("scenario horizon must be >= 1 hour");
  double total = 0.0;
  for (std::size_t w = 0; w < scenarios.size(); ++w) {
    const FleetScenario& sc = scenarios[w];
    const std::string tag = "scenario " + std::to_string(w);
    if (!(sc.probability >= 0.0)) throw_validation(tag + ": bad probability");
    total += sc.probability;
    if (static_cast<int>(sc.hours.size()) != h)
      throw_validation(tag + ": horizon differs from scenario 0");
    for (int t = 0; t < h; ++t) {
      const ScenarioHour& x = sc.hours[t];
      const std::string where = tag + " hour " + std::to_string(t);
      for (double v : {x.s_up, x.s_dn, x.dt_up, x.dt_dn, x.mileage, x.p_plus,
                       x.p_minus, x.e_minus, x.e_plus})
        if (!std::isfinite(v)) throw_validation(where + ": non-finite value");
      if (x.p_plus < 0.0 || x.p_minus > 0.0)
        throw_validation(where + ": needs p_plus >= 0 >= p_minus");
      if (x.e_minus > x.e_plus)
        throw_validation(where + ": e_minus exceeds e_plus");
      if (x.s_up < 0.0 || x.s_up > 1.0 || x.s_dn > 0.0 || x.s_dn < -1.0)
        throw_validation(where + ": needs 1 >= s_up >= 0 >= s_dn >= -1");
      if (x.dt_up < 0.0 || x.dt_dn < 0.0 ||
          std::abs(x.dt_up + x.dt_dn - 1.0) > 1e-9)
        throw_validation(where + ": dt_up + dt_dn must equal 1 hour");
      if (x.mileage < 0.0) throw_validation(where + ": negative mileage");
    }
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw_validation("scenario probabilities sum to " + std::to_string(total));
}

void MarketPrices::validate() const {
  if (!std::isfinite(c_d) || c_d < 0.0)
    throw_validation("degradation price must be finite and >= 0");
  for (std::size_t t = 0; t < hours.size(); ++t) {
    const HourPrices& h = hours[t];
    for (double v : {h.c_e_da, h.c_e_rt, h.c_rc, h.c_rp})
      if (!std::isfinite(v))
        throw_validation("non-finite price at hour " + std::to_string(t));
  }
}

}  // namespace regcap
