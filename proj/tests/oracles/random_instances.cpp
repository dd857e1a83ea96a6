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


#include "oracles/random_instances.hpp"

#include <cmath>

namespace regcap::oracle {

DayAheadInstance random_dayahead_instance(std::mt19937_64& rng, int hours,
                                          int scenarios) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto between = [&](double a, double b) { return a + (b - a) * u(rng); };
  DayAheadInstance inst;
  inst.eta_c = between(0.85, 1.0);
  inst.eta_d = between(0.85, 1.0);
  inst.prices.c_d = between(0.01, 0.2);
  for (int t = 0; t < hours; ++t) {
    HourPrices h;
    h.c_e_da = between(0.02, 0.1);
    h.c_e_rt = between(0.02, 0.15);
    h.c_rc = between(0.005, 0.05);
    h.c_rp = between(0.0005, 0.003);
    inst.prices.hours.push_back(h);
  }
  // Common reference increments, reachable in every scenario because each
  // envelope is at least base_plus / base_minus.
  std::vector<double> base_plus(hours), increment(hours);
  for (int t = 0; t < hours; ++t) {
    base_plus[t] = between(50.0, 150.0);
    const double step = between(-0.3, 0.7);
    increment[t] = step < 0.0 ? step * 0.2 * base_plus[t]
                              : step * inst.eta_c * base_plus[t];
  }
  std::vector<double> weights(scenarios);
  double total = 0.0;
  for (double& w : weights) total += (w = between(0.5, 1.5));
  for (int w = 0; w < scenarios; ++w) {
    FleetScenario sc;
    sc.probability = weights[w] / total;
    double energy = 0.0;
    for (int t = 0; t < hours; ++t) {
      ScenarioHour h;
      h.s_up = between(0.05, 1.0);
      h.s_dn = -between(0.05, 1.0);
      h.dt_up = between(0.3, 0.7);
      h.dt_dn = 1.0 - h.dt_up;
      h.mileage = between(5.0, 30.0);
      h.p_plus = base_plus[t] * between(1.0, 1.3);
      h.p_minus = -h.p_plus * between(0.2, 1.0);
      energy += increment[t];
      h.e_minus = energy - between(0.0, 40.0);
      h.e_plus = energy + between(0.0, 40.0);
      sc.hours.push_back(h);
    }
    inst.scenarios.scenarios.push_back(sc);
  }
  return inst;
}

HourAheadInstance random_hourahead_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto between = [&](double a, double b) { return a + (b - a) * u(rng); };
  HourAheadInstance in;
  in.eta_c = between(0.85, 1.0);
  in.eta_d = between(0.85, 1.0);
  in.prices.c_d = between(0.01, 0.1);
  HourPrices hp;
  hp.c_e_da = between(0.02, 0.1);
  hp.c_e_rt = between(0.02, 0.15);
  hp.c_rc = between(0.02, 0.06);
  hp.c_rp = between(0.001, 0.004);
  in.prices.hours = {hp};

  uncertainty::HourForecast& fc = in.forecast;
  fc.mean_p_plus = between(200.0, 1000.0);
  fc.var_p_plus = std::pow(between(0.01, 0.08) * fc.mean_p_plus, 2);
  fc.mean_p_minus = -fc.mean_p_plus * between(0.3, 1.0);
  fc.var_p_minus = std::pow(between(0.01, 0.08) * fc.mean_p_minus, 2);
  fc.mean_e_minus = between(0.0, 500.0);
  fc.mean_e_plus = fc.mean_e_minus + between(100.0, 600.0);
  fc.var_e_minus = std::pow(between(0.0, 20.0), 2);
  fc.var_e_plus = std::pow(between(0.0, 20.0), 2);
  fc.mean_e0 = fc.mean_e_minus + between(0.3, 0.7) *
                                     (fc.mean_e_plus - fc.mean_e_minus);
  fc.var_e0 = std::pow(between(0.0, 15.0), 2);
  fc.min_e0 = fc.mean_e0 - 3.0 * std::sqrt(fc.var_e0);
  fc.max_e0 = fc.mean_e0 + 3.0 * std::sqrt(fc.var_e0);

  uncertainty::SignalStatistics& st = in.stats;
  st.mean_s1 = between(-0.05, 0.05);
  st.var_s1 = between(0.1, 0.3);
  st.mean_sH = between(-0.05, 0.05);
  st.var_sH = between(0.005, 0.03);
  st.rho = between(0.0, 0.05);
  st.mean_mileage = between(10.0, 30.0);
  st.min_sH = st.mean_sH - 3.5 * std::sqrt(st.var_sH);
  st.max_sH = st.mean_sH + 3.5 * std::sqrt(st.var_sH);
  st.sample_count = 500;

  const double p_da = between(-0.3, 0.6) * fc.mean_p_plus;
  in.da.p_da = {p_da};
  in.da.r_da = {between(0.3, 1.5) * fc.mean_p_plus};

  const int count = 1 + static_cast<int>(u(rng) * 3.0);
  for (int w = 0; w < count; ++w) {
    FleetScenario sc;
    sc.probability = 1.0 / count;
    ScenarioHour h;
    h.s_up = between(0.2, 0.6);
    h.s_dn = -between(0.2, 0.6);
    h.dt_up = between(0.4, 0.6);
    h.dt_dn = 1.0 - h.dt_up;
    h.mileage = st.mean_mileage;
    h.p_plus = fc.mean_p_plus;
    h.p_minus = fc.mean_p_minus;
    h.e_minus = fc.mean_e_minus;
    h.e_plus = fc.mean_e_plus;
    sc.hours = {h};
    in.scenarios.scenarios.push_back(sc);
  }
  return in;
}

}  // namespace regcap::oracle
