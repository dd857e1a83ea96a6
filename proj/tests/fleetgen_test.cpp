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


#include "regcap/fleetgen.hpp"

#include <gtest/gtest.h>

#include "regcap/error.hpp"

namespace regcap::fleetgen {
namespace {

TEST(Fleetgen, SingleAlwaysConnectedVehicle) {
  Vehicle v;
  v.arrival = 0.0;
  v.departure = 24.0;
  v.power_kw = 6.6;
  v.room_kwh = 10.0;
  v.need_kwh = 0.0;
  const auto hours = aggregate_envelope({v}, 24);
  for (int t = 0; t < 24; ++t) {
    EXPECT_DOUBLE_EQ(hours[t].p_plus, 6.6);
    EXPECT_DOUBLE_EQ(hours[t].p_minus, -6.6);
    EXPECT_EQ(hours[t].e_minus, 0.0);
    EXPECT_DOUBLE_EQ(hours[t].e_plus, std::min(6.6 * (t + 1), 10.0));
  }
}

TEST(Fleetgen, LatestChargingLowerBound) {
  Vehicle v;
  v.arrival = 1.5;
  v.departure = 6.0;
  v.power_kw = 4.0;
  v.room_kwh = 12.0;
  v.need_kwh = 6.0;
  const auto h = aggregate_envelope({v}, 8);
  EXPECT_EQ(h[0].p_plus, 0.0);
  EXPECT_DOUBLE_EQ(h[1].p_plus, 2.0);  // half of hour 1
  EXPECT_DOUBLE_EQ(h[5].p_plus, 4.0);
  EXPECT_EQ(h[6].p_plus, 0.0);
  EXPECT_DOUBLE_EQ(h[3].e_minus, 0.0);   // 6 - 4 * 2
  EXPECT_DOUBLE_EQ(h[4].e_minus, 2.0);   // 6 - 4 * 1
  EXPECT_DOUBLE_EQ(h[5].e_minus, 6.0);
  EXPECT_DOUBLE_EQ(h[2].e_plus, 6.0);    // 4 * 1.5
  EXPECT_DOUBLE_EQ(h[7].e_plus, 12.0);
}

TEST(Fleetgen, NoiseFreeScenariosAreDeterministic) {
  FleetConfig cfg;
  cfg.n_vehicles = 300;
  cfg.noise_std = 0.0;
  const FleetScenarioSet a = generate_scenarios(cfg, 2, 24, 77);
  const FleetScenarioSet b = generate_scenarios(cfg, 2, 24, 77);
  for (int w = 0; w < 2; ++w)
    for (int t = 0; t < 24; ++t) {
      EXPECT_EQ(a.scenarios[w].hours[t].p_plus, b.scenarios[w].hours[t].p_plus);
      EXPECT_EQ(a.scenarios[w].hours[t].e_plus, b.scenarios[w].hours[t].e_plus);
      EXPECT_EQ(a.scenarios[w].hours[t].e_minus,
                b.scenarios[w].hours[t].e_minus);
    }
  EXPECT_DOUBLE_EQ(a.scenarios[0].probability, 0.5);
  // scenario w is the realization with seed + w
  const FleetScenario r = realize_fleet(cfg, 24, 78);
  EXPECT_EQ(r.hours[12].p_plus, a.scenarios[1].hours[12].p_plus);
  EXPECT_NO_THROW(a.validate());
}

TEST(Fleetgen, FullConnectionPowerExpectation) {
  // clock 24:00-25:00 is horizon hour 12: arrivals end by 24:00 and
  // departures start after 26:30 under the +-3 sigma truncation
  FleetConfig cfg;
  double sum = 0.0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s)
    sum += realize_fleet(cfg, 24, 1000 + s).hours[12].p_plus;
  EXPECT_NEAR(sum / seeds, 24750.0, 0.01 * 24750.0);
}

TEST(Fleetgen, EnvelopesAreConsistent) {
  FleetConfig cfg;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FleetScenario sc = realize_fleet(cfg, 24, seed);
    for (int t = 0; t < 24; ++t) {
      const ScenarioHour& h = sc.hours[t];
      EXPECT_LE(h.e_minus, h.e_plus);
      EXPECT_EQ(h.p_minus, -h.p_plus);
      EXPECT_GE(h.p_plus, 0.0);
      if (t > 0) {
        EXPECT_GE(h.e_plus, sc.hours[t - 1].e_plus);
        EXPECT_GE(h.e_minus, sc.hours[t - 1].e_minus);
      }
    }
    const auto env = to_envelopes(sc);
    EXPECT_EQ(env[0].e_plus_start, 0.0);
    for (int t = 1; t < 24; ++t) {
      EXPECT_EQ(env[t].e_plus_start, sc.hours[t - 1].e_plus);
      EXPECT_EQ(env[t].e_minus_start, sc.hours[t - 1].e_minus);
    }
  }
}

TEST(Fleetgen, NeedsAreReachable) {
  FleetConfig cfg;
  for (const Vehicle& v : sample_vehicles(cfg, 5)) {
    EXPECT_LE(v.need_kwh, v.room_kwh + 1e-12);
    EXPECT_LE(v.need_kwh, v.power_kw * (v.departure - v.arrival) + 1e-12);
    EXPECT_GE(v.departure, v.arrival);
  }
}

TEST(Fleetgen, RejectsBadConfig) {
  FleetConfig cfg;
  EXPECT_THROW(generate_scenarios(cfg, 1, 0, 1), Error);
  EXPECT_THROW(generate_scenarios(cfg, 0, 24, 1), Error);
  cfg.fraction_low_power = 1.5;
  EXPECT_THROW(sample_vehicles(cfg, 1), Error);
  cfg = FleetConfig{};
  cfg.eta = 0.0;
  EXPECT_THROW(sample_vehicles(cfg, 1), Error);
}

}  // namespace
}  // namespace regcap::fleetgen
