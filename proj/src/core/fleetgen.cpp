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

#include <algorithm>
#include <cmath>
#include <random>

#include "regcap/error.hpp"

namespace regcap::fleetgen {

namespace {

double truncated_normal(std::mt19937_64& rng, double mu, double sd) {
  if (sd <= 0.0) return mu;
  std::normal_distribution<double> z(0.0, 1.0);
  for (;;) {
    const double v = z(rng);
    if (std::abs(v) <= 3.0) return mu + sd * v;
  }
}

void apply_noise(std::vector<ScenarioHour>& hours, double sd,
                 std::mt19937_64& rng) {
  if (sd <= 0.0) return;
  std::normal_distribution<double> z(0.0, 1.0);
  for (ScenarioHour& h : hours) {
    h.p_plus = std::max(0.0, h.p_plus * (1.0 + sd * z(rng)));
    h.p_minus = -h.p_plus;
    h.e_plus = std::max(0.0, h.e_plus * (1.0 + sd * z(rng)));
    h.e_minus = std::max(0.0, h.e_minus * (1.0 + sd * z(rng)));
  }
  double run_hi = 0.0;
  double run_lo = 0.0;
  for (ScenarioHour& h : hours) {
    run_hi = std::max(run_hi, h.e_plus);
    run_lo = std::max(run_lo, h.e_minus);
    h.e_plus = run_hi;
    h.e_minus = std::min(run_lo, h.e_plus);
  }
}

}  // namespace

void FleetConfig::validate() const {
  if (n_vehicles < 0) throw_validation("n_vehicles must be >= 0");
  if (!(battery_kwh > 0.0)) throw_validation("battery_kwh must be > 0");
  if (!(fraction_low_power >= 0.0 && fraction_low_power <= 1.0))
    throw_validation("fraction_low_power must lie in [0, 1]");
  if (!(low_power_kw > 0.0 && high_power_kw > 0.0))
    throw_validation("charger powers must be > 0");
  if (!(eta > 0.0 && eta <= 1.0)) throw_validation("eta must lie in (0, 1]");
  if (!(c_d >= 0.0)) throw_validation("c_d must be >= 0");
  if (arrival_std < 0.0 || departure_std < 0.0 || trip_kwh_std < 0.0 ||
      noise_std < 0.0)
    throw_validation("standard deviations must be >= 0");
  if (!(departure_soc >= 0.0 && departure_soc <= 1.0))
    throw_validation("departure_soc must lie in [0, 1]");
}

std::vector<Vehicle> sample_vehicles(const FleetConfig& cfg,
                                     std::uint64_t seed) {
  cfg.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vehicle> fleet(cfg.n_vehicles);
  for (Vehicle& v : fleet) {
    v.power_kw = u(rng) < cfg.fraction_low_power ? cfg.low_power_kw
                                                 : cfg.high_power_kw;
    v.arrival = std::max(
        0.0, truncated_normal(rng, cfg.arrival_mean, cfg.arrival_std) -
                 cfg.start_hour);
    v.departure = std::max(
        v.arrival,
        truncated_normal(rng, cfg.departure_mean, cfg.departure_std) -
            cfg.start_hour);
    const double trip = std::clamp(
        truncated_normal(rng, cfg.trip_kwh_mean, cfg.trip_kwh_std), 0.0,
        cfg.battery_kwh);
    const double soc0 = cfg.battery_kwh - trip;
    v.room_kwh = cfg.battery_kwh - soc0;
    v.need_kwh = std::max(0.0, cfg.departure_soc * cfg.battery_kwh - soc0);
    v.need_kwh = std::min(v.need_kwh, v.power_kw * (v.departure - v.arrival));
  }
  return fleet;
}

std::vector<ScenarioHour> aggregate_envelope(const std::vector<Vehicle>& fleet,
                                             int horizon) {
  std::vector<ScenarioHour> hours(horizon);
  for (int t = 0; t < horizon; ++t) {
    const double tau = t + 1.0;
    ScenarioHour& h = hours[t];
    for (const Vehicle& v : fleet) {
      h.e_plus += std::min(v.power_kw * std::max(0.0, tau - v.arrival),
                           v.room_kwh);
      h.e_minus += std::max(
          0.0, v.need_kwh - v.power_kw * std::max(0.0, v.departure - tau));
      const double overlap = std::max(
          0.0, std::min(tau, v.departure) - std::max(tau - 1.0, v.arrival));
      h.p_plus += v.power_kw * overlap;
    }
    h.p_minus = -h.p_plus;
    h.e_minus = std::min(h.e_minus, h.e_plus);
  }
  return hours;
}

FleetScenario realize_fleet(const FleetConfig& cfg, int horizon,
                            std::uint64_t seed) {
  if (horizon < 1) throw_validation("horizon must be >= 1 hour");
  FleetScenario sc;
  sc.hours = aggregate_envelope(sample_vehicles(cfg, seed), horizon);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  apply_noise(sc.hours, cfg.noise_std, rng);
  return sc;
}

FleetScenarioSet generate_scenarios(const FleetConfig& cfg, int n_scenarios,
                                    int horizon, std::uint64_t seed) {
  if (horizon < 1) throw_validation("horizon must be >= 1 hour");
  if (n_scenarios < 1) throw_validation("need at least one scenario");
  FleetScenarioSet set;
  for (int w = 0; w < n_scenarios; ++w) {
    FleetScenario sc = realize_fleet(cfg, horizon, seed + w);
    sc.probability = 1.0 / n_scenarios;
    set.scenarios.push_back(std::move(sc));
  }
  return set;
}

std::vector<simulator::HourEnvelope> to_envelopes(const FleetScenario& sc) {
  std::vector<simulator::HourEnvelope> env(sc.hours.size());
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t t = 0; t < sc.hours.size(); ++t) {
    const ScenarioHour& h = sc.hours[t];
    env[t].p_plus = h.p_plus;
    env[t].p_minus = h.p_minus;
    env[t].e_minus = h.e_minus;
    env[t].e_plus = h.e_plus;
    env[t].e_minus_start = lo;
    env[t].e_plus_start = hi;
    lo = h.e_minus;
    hi = h.e_plus;
  }
  return env;
}

}  // namespace regcap::fleetgen
