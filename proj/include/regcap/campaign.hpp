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


#ifndef REGCAP_CAMPAIGN_HPP_
#define REGCAP_CAMPAIGN_HPP_

// Multi-day offer and settlement campaign on a synthetic fleet.
//
// Seeds: every random stream derives from CampaignConfig::seed via
// derive_seed(seed, tag) with tags
//   1          signal history
//   100 + d    day-ahead fleet scenarios of day d
//   200 + d    realized fleet of day d
//   300 + d    realized signals of day d
//   400 + d    prices of day d
//   500 + d    history hours attached to the scenarios of day d

#include <cstdint>
#include <span>
#include <vector>

#include "regcap/dayahead.hpp"
#include "regcap/fleetgen.hpp"
#include "regcap/hourahead.hpp"
#include "regcap/simulator.hpp"
#include "regcap/uncertainty.hpp"

namespace regcap::campaign {

using hourahead::Strategy;

struct PriceModel {
  double energy_base = 0.035;      // $/kWh
  double energy_swing = 0.015;     // daily cosine amplitude, peak at 18:00
  double realtime_premium = 0.25;  // c_e_rt = c_e_da * (1 + premium)
  double capacity = 0.03;          // $/kW per hour
  double performance = 0.0002;     // $/kW per unit mileage
  double noise = 0.1;              // relative, per hour and day
};

MarketPrices synthetic_prices(const PriceModel& model, int horizon,
                              double start_hour, double c_d,
                              std::uint64_t seed);

// Gives every scenario hour the signal aggregate of a uniformly drawn
// archive hour.
void attach_aggregates(FleetScenarioSet& scen,
                       std::span<const signals::HourlyAggregate> aggregates,
                       std::uint64_t seed);

struct CampaignConfig {
  fleetgen::FleetConfig fleet;
  PriceModel prices;
  signals::SyntheticSignalConfig signal;
  int days = 7;
  int horizon = 24;
  int scenarios = 3;
  int samples_per_hour = signals::kDefaultSamplesPerHour;
  int history_hours = 1000;
  int e0_trajectories = 20;  // history hours replayed to estimate e0
  int bins = uncertainty::kDefaultBins;
  double eps = 0.2;
  std::uint64_t seed = 1;
  hourahead::HourAheadOptions hour_ahead;

  // Throws Error(kValidation).
  void validate() const;
};

// Everything the strategies share: signal statistics, and per day the
// prices, scenarios, day-ahead solution and the realized fleet and signals.
struct DayContext {
  MarketPrices prices;
  FleetScenarioSet scenarios;
  dayahead::DayAheadSolution da;
  std::vector<simulator::HourEnvelope> realized;
  std::vector<simulator::HourEnvelope> forecast_envelopes;
  std::vector<signals::SignalTrajectory> signals;
};

struct CampaignContext {
  CampaignConfig config;
  uncertainty::SignalStatistics stats;
  std::vector<signals::SignalTrajectory> e0_pool;
  std::vector<DayContext> days;
};

CampaignContext prepare(const CampaignConfig& config);

struct DayResult {
  Strategy strategy = Strategy::kProposed;
  int day = 0;
  double eps = 0.0;
  std::vector<hourahead::HourAheadSolution> offers;
  std::vector<simulator::HourSettlement> hours;
  simulator::DaySummary summary;
  int infeasible_hours = 0;
};

DayResult run_day(const CampaignContext& ctx, int day, Strategy strategy,
                  double eps);

struct StrategySummary {
  Strategy strategy = Strategy::kProposed;
  double eps = 0.0;
  int days = 0;
  double offer_mwh = 0.0;         // mean per day
  double score = 1.0;             // mean over regulated hours
  double revenue = 0.0;           // mean actual $ per day
  double expected_revenue = 0.0;  // mean expected $ per day
  int regulated_hours = 0;
  int violated_hours = 0;
};

StrategySummary summarize(const std::vector<DayResult>& days);

struct CampaignResult {
  std::vector<DayResult> days;  // strategy-major, then day
  std::vector<StrategySummary> summaries;
};

CampaignResult run_campaign(const CampaignContext& ctx,
                            const std::vector<Strategy>& strategies,
                            double eps);
CampaignResult run_campaign(const CampaignConfig& config,
                            const std::vector<Strategy>& strategies);

}  // namespace regcap::campaign

#endif  // REGCAP_CAMPAIGN_HPP_
