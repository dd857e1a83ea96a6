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


#include "regcap/campaign.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "regcap/error.hpp"
#include "regcap/numeric.hpp"

namespace regcap::campaign {

MarketPrices synthetic_prices(const PriceModel& model, int horizon,
                              double start_hour, double c_d,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  auto noisy = [&](double v) {
    return std::max(0.0, v * (1.0 + model.noise * z(rng)));
  };
  MarketPrices prices;
  prices.c_d = c_d;
  for (int t = 0; t < horizon; ++t) {
    const double clock = std::fmod(start_hour + t, 24.0);
    HourPrices h;
    h.c_e_da = noisy(model.energy_base +
                     model.energy_swing *
                         std::cos(2.0 * std::numbers::pi * (clock - 18.0) / 24.0));
    h.c_e_rt = h.c_e_da * (1.0 + model.realtime_premium);
    h.c_rc = noisy(model.capacity);
    h.c_rp = noisy(model.performance);
    prices.hours.push_back(h);
  }
  return prices;
}

void attach_aggregates(FleetScenarioSet& scen,
                       std::span<const signals::HourlyAggregate> aggregates,
                       std::uint64_t seed) {
  if (aggregates.empty()) throw_validation("no signal hours to attach");
  std::mt19937_64 pick(seed);
  std::uniform_int_distribution<std::size_t> any(0, aggregates.size() - 1);
  for (FleetScenario& sc : scen.scenarios)
    for (ScenarioHour& h : sc.hours) {
      const signals::HourlyAggregate& a = aggregates[any(pick)];
      h.s_up = a.s_up;
      h.s_dn = a.s_dn;
      h.dt_up = a.dt_up;
      h.dt_dn = a.dt_dn;
      h.mileage = a.mileage;
    }
}

void CampaignConfig::validate() const {
  fleet.validate();
  if (days < 0) throw_validation("days must be >= 0");
  if (horizon < 1) throw_validation("horizon must be >= 1");
  if (scenarios < 1) throw_validation("scenarios must be >= 1");
  if (samples_per_hour < 2) throw_validation("samples_per_hour must be >= 2");
  if (history_hours < 2) throw_validation("history_hours must be >= 2");
  if (e0_trajectories < 2 || e0_trajectories > history_hours)
    throw_validation("e0_trajectories must lie in [2, history_hours]");
  if (!(eps > 0.0 && eps <= 0.5)) throw_validation("eps must lie in (0, 0.5]");
}

CampaignContext prepare(const CampaignConfig& config) {
  config.validate();
  CampaignContext ctx;
  ctx.config = config;
  const std::uint64_t seed = config.seed;
  const auto history = signals::synthetic_signals(
      config.history_hours, config.samples_per_hour, derive_seed(seed, 1),
      config.signal);
  ctx.stats = uncertainty::fit_signal_stats(history, config.bins);
  // evenly spaced hours of the archive
  for (int k = 0; k < config.e0_trajectories; ++k)
    ctx.e0_pool.push_back(
        history[static_cast<std::size_t>(k) * history.size() /
                config.e0_trajectories]);
  std::vector<signals::HourlyAggregate> aggregates;
  aggregates.reserve(history.size());
  for (const auto& h : history) aggregates.push_back(signals::aggregate(h));

  const double eta = config.fleet.eta;
  for (int d = 0; d < config.days; ++d) {
    DayContext day;
    day.prices = synthetic_prices(config.prices, config.horizon,
                                  config.fleet.start_hour, config.fleet.c_d,
                                  derive_seed(seed, 400 + d));
    day.scenarios = fleetgen::generate_scenarios(
        config.fleet, config.scenarios, config.horizon,
        derive_seed(seed, 100 + d));
    attach_aggregates(day.scenarios, aggregates, derive_seed(seed, 500 + d));
    day.da = dayahead::solve_dayahead(dayahead::build_dayahead(
        day.prices, day.scenarios, eta, eta, config.horizon));
    day.realized = fleetgen::to_envelopes(fleetgen::realize_fleet(
        config.fleet, config.horizon, derive_seed(seed, 200 + d)));
    day.forecast_envelopes = fleetgen::to_envelopes(
        hourahead::mean_scenario(day.scenarios).scenarios[0]);
    day.signals = signals::synthetic_signals(
        config.horizon, config.samples_per_hour, derive_seed(seed, 300 + d),
        config.signal, static_cast<long>(d) * config.horizon);
    ctx.days.push_back(std::move(day));
  }
  return ctx;
}

DayResult run_day(const CampaignContext& ctx, int d, Strategy strategy,
                  double eps) {
  if (d < 0 || d >= static_cast<int>(ctx.days.size()))
    throw_argument("day outside the campaign");
  const CampaignConfig& cfg = ctx.config;
  const DayContext& day = ctx.days[d];
  const double eta = cfg.fleet.eta;
  DayResult out;
  out.strategy = strategy;
  out.day = d;
  out.eps = eps;
  std::vector<simulator::HourRecord> records;
  double energy = 0.0;       // realized cumulative energy
  double prev_start = 0.0;   // realized energy at the start of hour t-1
  simulator::Offer prev_offer;
  for (int t = 0; t < cfg.horizon; ++t) {
    uncertainty::HourForecast fc = uncertainty::forecast_from_scenarios(
        day.scenarios, t, cfg.fleet.noise_std);
    if (t > 0) {
      // replay hour t-1 from its realized start under archived signals
      const uncertainty::E0Estimate e0 = uncertainty::estimate_e0(
          prev_offer, ctx.e0_pool, day.forecast_envelopes[t - 1], prev_start,
          eta, eta);
      fc.mean_e0 = e0.mean;
      fc.var_e0 = e0.var;
      fc.min_e0 = e0.min;
      fc.max_e0 = e0.max;
    }
    const hourahead::HourAheadSolution sol =
        hourahead::offer(strategy, day.da, t, day.prices, day.scenarios,
                         ctx.stats, fc, eps, eta, eta, cfg.hour_ahead);
    if (sol.infeasible) ++out.infeasible_hours;
    simulator::HourRecord rec;
    rec.hour = t;
    rec.offer = {sol.r, sol.p};
    rec.p_da = day.da.p_da[t];
    rec.mileage = signals::mileage(day.signals[t]);
    rec.prices = day.prices.hours[t];
    rec.expected.regulation_revenue = sol.regulation_revenue;
    rec.expected.energy_cost = sol.deviation_cost;
    rec.expected.degradation_cost = sol.degradation_cost;
    rec.dispatch = simulator::dispatch(rec.offer, day.signals[t],
                                       day.realized[t], energy, eta, eta);
    prev_start = energy;
    prev_offer = rec.offer;
    energy = rec.dispatch.e_end;
    records.push_back(std::move(rec));
    out.offers.push_back(sol);
  }
  out.hours = simulator::settle(records, day.prices.c_d);
  out.summary = simulator::summarize(out.hours);
  return out;
}

StrategySummary summarize(const std::vector<DayResult>& days) {
  StrategySummary s;
  if (days.empty()) return s;
  s.strategy = days.front().strategy;
  s.eps = days.front().eps;
  s.days = static_cast<int>(days.size());
  double score_sum = 0.0;
  for (const DayResult& d : days) {
    s.offer_mwh += d.summary.offer_mwh;
    s.revenue += d.summary.actual_revenue;
    s.expected_revenue += d.summary.expected_revenue;
    s.regulated_hours += d.summary.regulated_hours;
    s.violated_hours += d.summary.violated_hours;
    for (const simulator::HourSettlement& h : d.hours)
      if (h.regulated) score_sum += h.score;
  }
  s.offer_mwh /= s.days;
  s.revenue /= s.days;
  s.expected_revenue /= s.days;
  s.score = s.regulated_hours > 0 ? score_sum / s.regulated_hours : 1.0;
  return s;
}

CampaignResult run_campaign(const CampaignContext& ctx,
                            const std::vector<Strategy>& strategies,
                            double eps) {
  CampaignResult res;
  for (Strategy s : strategies) {
    std::vector<DayResult> rows;
    for (int d = 0; d < static_cast<int>(ctx.days.size()); ++d)
      rows.push_back(run_day(ctx, d, s, eps));
    res.summaries.push_back(summarize(rows));
    if (rows.empty()) res.summaries.back().strategy = s;
    for (DayResult& r : rows) res.days.push_back(std::move(r));
  }
  return res;
}

CampaignResult run_campaign(const CampaignConfig& config,
                            const std::vector<Strategy>& strategies) {
  return run_campaign(prepare(config), strategies, config.eps);
}

}  // namespace regcap::campaign
