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


#include "regcap/regcap.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <sstream>
#include <string>

#include <json.hpp>

#include "regcap/campaign.hpp"
#include "regcap/error.hpp"
#include "regcap/io.hpp"
#include "regcap/numeric.hpp"

struct regcap_config {
  regcap::io::KeyValues kv;
};

namespace {

using namespace regcap;
using nlohmann::json;

thread_local std::string g_error;
thread_local std::string g_error_json = "{}";

const char* kind_name(regcap_status s) {
  switch (s) {
    case REGCAP_OK: return "ok";
    case REGCAP_ERR_ARGUMENT: return "argument";
    case REGCAP_ERR_IO: return "io";
    case REGCAP_ERR_VALIDATION: return "validation";
    case REGCAP_ERR_SOLVER: return "solver";
    case REGCAP_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

regcap_status fail(regcap_status s, const std::string& msg) {
  g_error = msg;
  g_error_json = json{{"status", static_cast<int>(s)},
                      {"kind", kind_name(s)},
                      {"message", msg}}
                     .dump();
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
regcap_status guarded(F&& f) {
  try {
    f();
    g_error.clear();
    g_error_json = "{}";
    return REGCAP_OK;
  } catch (const Error& e) {
    return fail(static_cast<regcap_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(REGCAP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(REGCAP_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void give(char** dst, const std::string& s) {
  if (dst) *dst = dup(s);
}

void need(const void* p, const char* what) {
  if (!p) throw_argument(std::string(what) + " must not be NULL");
}

std::string out_or_default(const io::RunConfig& c, const char* path,
                           const char* name) {
  if (path && *path) return path;
  return (std::filesystem::path(c.output_dir) / name).string();
}

void ensure_parent(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (parent.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(parent, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create " + parent.string());
}

void emit(const std::string& path, const std::string& text) {
  ensure_parent(path);
  io::write_file(path, text);
}

// ---- input resolution ----------------------------------------------------
// Missing paths fall back to the synthetic generators with the same seed
// tags as day 0 of a campaign.

std::vector<signals::SignalTrajectory> history(const io::RunConfig& c) {
  const int n = c.campaign.samples_per_hour;
  if (!c.signals_path.empty())
    return signals::load_trajectories(c.signals_path, n);
  return signals::synthetic_signals(c.campaign.history_hours, n,
                                    derive_seed(c.seed, 1), c.campaign.signal);
}

std::vector<signals::SignalTrajectory> realized_signals(const io::RunConfig& c) {
  const int n = c.campaign.samples_per_hour;
  if (!c.signals_path.empty())
    return signals::load_trajectories(c.signals_path, n);
  return signals::synthetic_signals(c.horizon, n, derive_seed(c.seed, 300),
                                    c.campaign.signal);
}

uncertainty::SignalStatistics statistics(const io::RunConfig& c) {
  if (!c.stats_path.empty()) {
    std::istringstream in(io::read_file(c.stats_path));
    std::string line;
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return io::stats_from_json(line);
    throw_validation("statistics file is empty");
  }
  return uncertainty::fit_signal_stats(history(c), c.bins);
}

MarketPrices prices(const io::RunConfig& c) {
  MarketPrices p;
  if (!c.prices_path.empty()) {
    std::istringstream in(io::read_file(c.prices_path));
    p = io::parse_prices(in, c.c_d);
  } else {
    p = campaign::synthetic_prices(c.campaign.prices, c.horizon,
                                   c.campaign.fleet.start_hour, c.c_d,
                                   derive_seed(c.seed, 400));
  }
  if (p.horizon() < c.horizon)
    throw_validation("prices cover " + std::to_string(p.horizon()) +
                     " hours, horizon is " + std::to_string(c.horizon));
  return p;
}

FleetScenarioSet scenarios(const io::RunConfig& c) {
  FleetScenarioSet s;
  if (!c.scenarios_path.empty()) {
    std::istringstream in(io::read_file(c.scenarios_path));
    s = io::parse_scenarios(in);
  } else {
    s = fleetgen::generate_scenarios(c.campaign.fleet, c.campaign.scenarios,
                                     c.horizon, derive_seed(c.seed, 100));
    std::vector<signals::HourlyAggregate> aggs;
    for (const auto& t : history(c)) aggs.push_back(signals::aggregate(t));
    campaign::attach_aggregates(s, aggs, derive_seed(c.seed, 500));
  }
  if (s.horizon() < c.horizon)
    throw_validation("scenarios cover " + std::to_string(s.horizon()) +
                     " hours, horizon is " + std::to_string(c.horizon));
  return s;
}

dayahead::DayAheadSolution solve_da(const io::RunConfig& c,
                                    const MarketPrices& p,
                                    const FleetScenarioSet& s) {
  return dayahead::solve_dayahead(
      dayahead::build_dayahead(p, s, c.eta, c.eta, c.horizon));
}

io::RunConfig resolve(const regcap_config* cfg) {
  need(cfg, "config");
  return io::run_config(cfg->kv);
}

std::string dump_line(const json& j) { return io::dump_json(j); }

}  // namespace

extern "C" {

const char* regcap_version(void) { return "1.0.0"; }
const char* regcap_last_error(void) { return g_error.c_str(); }
const char* regcap_last_error_json(void) { return g_error_json.c_str(); }
void regcap_string_free(char* s) { std::free(s); }

regcap_status regcap_config_new(regcap_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new regcap_config();
  });
}

void regcap_config_free(regcap_config* cfg) { delete cfg; }

regcap_status regcap_config_load(regcap_config* cfg, const char* path) {
  return guarded([&] {
    need(cfg, "config");
    need(path, "path");
    io::KeyValues kv = io::load_key_values(path);
    io::KeyValues merged = cfg->kv;
    for (auto& [k, v] : kv.values) merged.values[k] = v;
    io::run_config(merged);  // reject unknown keys now
    cfg->kv = std::move(merged);
  });
}

regcap_status regcap_config_set(regcap_config* cfg, const char* key,
                                const char* value) {
  return guarded([&] {
    need(cfg, "config");
    need(key, "key");
    need(value, "value");
    const auto& keys = io::config_keys();
    if (std::none_of(keys.begin(), keys.end(),
                     [&](const io::ConfigKey& k) { return k.name == key; }))
      throw_validation(std::string("unknown config key '") + key + "'");
    cfg->kv.values[key] = value;
  });
}

regcap_status regcap_config_get(const regcap_config* cfg, const char* key,
                                char** value) {
  return guarded([&] {
    need(cfg, "config");
    need(key, "key");
    need(value, "value");
    const auto it = cfg->kv.values.find(key);
    if (it != cfg->kv.values.end()) {
      *value = dup(it->second);
      return;
    }
    for (const io::ConfigKey& k : io::config_keys())
      if (k.name == key) {
        *value = dup(k.default_value);
        return;
      }
    throw_validation(std::string("unknown config key '") + key + "'");
  });
}

regcap_status regcap_config_validate(const regcap_config* cfg) {
  return guarded([&] { resolve(cfg); });
}

size_t regcap_config_key_count(void) { return io::config_keys().size(); }

const char* regcap_config_key_name(size_t i) {
  const auto& k = io::config_keys();
  return i < k.size() ? k[i].name.c_str() : nullptr;
}

const char* regcap_config_key_default(size_t i) {
  const auto& k = io::config_keys();
  return i < k.size() ? k[i].default_value.c_str() : nullptr;
}

const char* regcap_config_key_help(size_t i) {
  const auto& k = io::config_keys();
  return i < k.size() ? k[i].help.c_str() : nullptr;
}

regcap_status regcap_aggregate(const regcap_config* cfg, const char* out_path,
                               char** summary) {
  return guarded([&] {
    const io::RunConfig c = resolve(cfg);
    if (c.signals_path.empty()) throw_argument("aggregate needs `signals`");
    std::vector<io::AggregateRow> rows;
    for (const auto& t : history(c)) rows.push_back({t.hour_id, signals::aggregate(t)});
    std::ostringstream out;
    io::write_aggregates(out, rows);
    const std::string path = out_or_default(c, out_path, "aggregates.csv");
    emit(path, out.str());
    give(summary, dump_line({{"command", "aggregate"},
                             {"hours", rows.size()},
                             {"output", path}}));
  });
}

regcap_status regcap_stats(const regcap_config* cfg, const char* out_path,
                           char** summary) {
  return guarded([&] {
    const io::RunConfig c = resolve(cfg);
    const auto st = uncertainty::fit_signal_stats(history(c), c.bins);
    const std::string line = io::stats_to_json(st);
    const std::string path = out_or_default(c, out_path, "stats.json");
    emit(path, line + "\n");
    give(summary, line);
  });
}

regcap_status regcap_offer_da(const regcap_config* cfg, const char* out_path,
                              char** summary) {
  return guarded([&] {
    const io::RunConfig c = resolve(cfg);
    const MarketPrices p = prices(c);
    const FleetScenarioSet s = scenarios(c);
    const auto da = solve_da(c, p, s);
    const std::string path = out_or_default(c, out_path, "dayahead.json");
    emit(path, io::dayahead_to_json(da));
    double r = 0.0;
    for (double v : da.r_da) r += v;
    give(summary, dump_line({{"command", "offer-da"},
                             {"objective", io::round9(da.objective)},
                             {"gap", io::round9(da.gap)},
                             {"nodes", da.nodes},
                             {"offer_mwh", io::round9(r / 1000.0)},
                             {"output", path}}));
  });
}

regcap_status regcap_offer_ha(const regcap_config* cfg,
                              const char* dayahead_path, int hour,
                              const char* out_path, char** summary) {
  return guarded([&] {
    const io::RunConfig c = resolve(cfg);
    const MarketPrices p = prices(c);
    const FleetScenarioSet s = scenarios(c);
    const auto st = statistics(c);
    const dayahead::DayAheadSolution da =
        dayahead_path && *dayahead_path
            ? io::dayahead_from_json(io::read_file(dayahead_path))
            : solve_da(c, p, s);
    if (da.horizon() < c.horizon)
      throw_validation("day-ahead solution covers fewer hours than horizon");
    if (hour >= c.horizon) throw_argument("hour outside the horizon");
    const int first = hour < 0 ? 0 : hour;
    const int last = hour < 0 ? c.horizon : hour + 1;
    const bool fixed_e0 = cfg->kv.has("e0");
    std::vector<hourahead::HourAheadSolution> offers;
    for (int t = first; t < last; ++t) {
      uncertainty::HourForecast fc =
          uncertainty::forecast_from_scenarios(s, t, c.forecast_std);
      // start energy: the config value, else the day-ahead expectation
      double e0 = c.e0;
      if (!fixed_e0 && t > 0 && !da.cells.empty()) {
        e0 = 0.0;
        for (int w = 0; w < s.size(); ++w)
          e0 += s.scenarios[w].probability * da.cells.at(w).at(t - 1).energy;
      }
      fc.mean_e0 = e0;
      fc.var_e0 = c.e0_var;
      fc.min_e0 = e0 - 3.0 * std::sqrt(c.e0_var);
      fc.max_e0 = e0 + 3.0 * std::sqrt(c.e0_var);
      offers.push_back(hourahead::offer(c.strategy, da, t, p, s, st, fc, c.eps,
                                        c.eta, c.eta, c.campaign.hour_ahead));
    }
    std::ostringstream out;
    io::write_offers(out, offers);
    const std::string path = out_or_default(c, out_path, "offers.jsonl");
    emit(path, out.str());
    double r = 0.0;
    int infeasible = 0;
    for (const auto& o : offers) {
      r += o.r;
      infeasible += o.infeasible;
    }
    give(summary, dump_line({{"command", "offer-ha"},
                             {"strategy", hourahead::to_string(c.strategy)},
                             {"hours", offers.size()},
                             {"offer_mwh", io::round9(r / 1000.0)},
                             {"infeasible_hours", infeasible},
                             {"output", path}}));
  });
}

regcap_status regcap_simulate(const regcap_config* cfg,
                              const char* offers_path,
                              const char* dayahead_path,
                              const char* dispatch_path,
                              const char* ledger_path, char** summary) {
  return guarded([&] {
    const io::RunConfig c = resolve(cfg);
    need(offers_path, "offers_path");
    std::istringstream oin(io::read_file(offers_path));
    auto offers = io::parse_offers(oin);
    if (offers.empty()) throw_validation("offers file is empty");
    std::stable_sort(offers.begin(), offers.end(),
                     [](const auto& a, const auto& b) { return a.hour < b.hour; });
    const MarketPrices p = prices(c);
    const auto sigs = realized_signals(c);
    const auto env = fleetgen::to_envelopes(fleetgen::realize_fleet(
        c.campaign.fleet, c.horizon, derive_seed(c.seed, 200)));
    std::vector<double> p_da;
    if (dayahead_path && *dayahead_path)
      p_da = io::dayahead_from_json(io::read_file(dayahead_path)).p_da;
    std::vector<simulator::HourRecord> records;
    std::vector<double> p_kw, p_da_kw;
    std::ostringstream dispatch_out;
    double energy = 0.0;
    for (const auto& o : offers) {
      const int t = o.hour;
      if (t < 0 || t >= c.horizon) throw_validation("offer hour outside the horizon");
      if (t >= static_cast<int>(sigs.size()))
        throw_validation("signals file has no hour " + std::to_string(t));
      simulator::HourRecord rec;
      rec.hour = t;
      rec.offer = {o.r, o.p};
      rec.p_da = p_da.empty() ? o.p : p_da.at(t);
      rec.mileage = signals::mileage(sigs[t]);
      rec.prices = p.hours[t];
      rec.expected.regulation_revenue = o.regulation_revenue;
      rec.expected.energy_cost = o.deviation_cost;
      rec.expected.degradation_cost = o.degradation_cost;
      rec.dispatch = simulator::dispatch(rec.offer, sigs[t], env[t], energy,
                                         c.eta, c.eta);
      energy = rec.dispatch.e_end;
      const auto& d = rec.dispatch;
      dispatch_out << io::dump_json(json{{"hour", t},
                           {"r", io::round9(o.r)},
                           {"p", io::round9(o.p)},
                           {"score", io::round9(d.score)},
                           {"score_raw", io::round9(d.score_raw)},
                           {"clamped_steps", d.clamped_steps},
                           {"start_outside_band", d.start_outside_band},
                           {"e_start", io::round9(d.e_start)},
                           {"e_end", io::round9(d.e_end)},
                           {"grid_energy", io::round9(d.grid_energy)},
                           {"discharged_energy",
                            io::round9(d.discharged_energy)}})
                   << '\n';
      p_kw.push_back(o.p);
      p_da_kw.push_back(rec.p_da);
      records.push_back(std::move(rec));
    }
    const auto hours = simulator::settle(records, p.c_d);
    const auto sum = simulator::summarize(hours);
    std::ostringstream ledger_out;
    io::write_ledger(ledger_out,
                     io::ledger_rows(hourahead::to_string(offers[0].strategy),
                                     offers[0].eps, 0, hours, p_kw, p_da_kw));
    emit(out_or_default(c, dispatch_path, "dispatch.jsonl"), dispatch_out.str());
    emit(out_or_default(c, ledger_path, "ledger.csv"), ledger_out.str());
    give(summary, dump_line({{"command", "simulate"},
                             {"hours", hours.size()},
                             {"offer_mwh", io::round9(sum.offer_mwh)},
                             {"score", io::round9(sum.mean_score)},
                             {"revenue_usd", io::round9(sum.actual_revenue)},
                             {"expected_usd", io::round9(sum.expected_revenue)},
                             {"violated_hours", sum.violated_hours}}));
  });
}

regcap_status regcap_benchmark(const regcap_config* cfg, char** summary) {
  return guarded([&] {
    const io::RunConfig c = resolve(cfg);
    const campaign::CampaignContext ctx = campaign::prepare(c.campaign);
    using hourahead::Strategy;
    const campaign::CampaignResult main = campaign::run_campaign(
        ctx,
        {Strategy::kProposed, Strategy::kRobust, Strategy::kDeterm,
         Strategy::kIgnoreEffi},
        c.eps);
    campaign::CampaignResult all = main;
    for (double e : c.eps_sweep) {
      const auto r = campaign::run_campaign(ctx, {Strategy::kProposed}, e);
      all.days.insert(all.days.end(), r.days.begin(), r.days.end());
      all.summaries.insert(all.summaries.end(), r.summaries.begin(),
                           r.summaries.end());
    }

    std::ostringstream table;
    table << "strategy,eps,offer_mwh_per_day,score,violation_ratio,"
             "revenue_usd_per_day,expected_usd_per_day,infeasible_hours\n";
    json brief = json::array();
    for (const auto& s : main.summaries) {
      int infeasible = 0;
      for (const auto& d : main.days)
        if (d.strategy == s.strategy) infeasible += d.infeasible_hours;
      const double vr = s.regulated_hours
                            ? double(s.violated_hours) / s.regulated_hours
                            : 0.0;
      table << hourahead::to_string(s.strategy) << ','
            << io::format_number(s.eps) << ','
            << io::format_number(s.offer_mwh) << ','
            << io::format_number(s.score) << ',' << io::format_number(vr)
            << ',' << io::format_money(s.revenue) << ','
            << io::format_money(s.expected_revenue) << ',' << infeasible
            << '\n';
      brief.push_back({{"strategy", hourahead::to_string(s.strategy)},
                       {"offer_mwh_per_day", io::round9(s.offer_mwh)},
                       {"score", io::round9(s.score)},
                       {"revenue_usd_per_day", io::round9(s.revenue)}});
    }
    std::ostringstream camp, ledger;
    io::write_campaign(camp, io::campaign_rows(main));
    std::vector<io::LedgerRow> rows;
    for (const auto& d : all.days) {
      const auto r = io::ledger_rows(ctx, d);
      rows.insert(rows.end(), r.begin(), r.end());
    }
    io::write_ledger(ledger, rows);
    const std::filesystem::path dir(c.output_dir);
    emit((dir / "benchmark.csv").string(), table.str());
    emit((dir / "campaign.csv").string(), camp.str());
    emit((dir / "ledger.csv").string(), ledger.str());
    emit((dir / "summary.json").string(), io::campaign_summary_json(all));
    give(summary, dump_line({{"command", "benchmark"},
                             {"days", c.campaign.days},
                             {"seed", c.seed},
                             {"strategies", brief}}));
  });
}

regcap_status regcap_report(const char* ledger_path, const char* out_path,
                            char** summary) {
  return guarded([&] {
    need(ledger_path, "ledger_path");
    need(out_path, "out_path");
    std::istringstream in(io::read_file(ledger_path));
    const auto pts = io::report_series(io::parse_ledger(in));
    std::ostringstream out;
    io::write_report(out, pts);
    emit(out_path, out.str());
    give(summary, dump_line({{"command", "report"},
                             {"series", pts.size()},
                             {"output", out_path}}));
  });
}

regcap_status regcap_adjusted_epsilon(double eps, double rho, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = uncertainty::adjusted_epsilon(eps, rho);
  });
}

regcap_status regcap_gaussian_quantile(double p, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = uncertainty::gaussian_quantile(p);
  });
}

regcap_status regcap_kappa_power(double eps, double* out) {
  return guarded([&] {
    need(out, "out");
    if (!(eps > 0.0 && eps < 1.0)) throw_argument("eps must lie in (0, 1)");
    *out = uncertainty::kappa_power(eps);
  });
}

}  // extern "C"
