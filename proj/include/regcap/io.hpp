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


#ifndef REGCAP_IO_HPP_
#define REGCAP_IO_HPP_

// File formats and run configuration. Numbers are written with 9
// significant digits, money in ledgers with 2 decimals. Every writer has a
// parser, and parse-then-write reproduces the bytes.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "regcap/campaign.hpp"
#include "regcap/dayahead.hpp"
#include "regcap/hourahead.hpp"
#include "regcap/market.hpp"
#include "regcap/scenario.hpp"
#include "regcap/signals.hpp"
#include "regcap/uncertainty.hpp"

namespace regcap::io {

std::string format_number(double v);  // %.9g
std::string format_money(double v);   // %.2f
double round9(double v);

// JSON text with every floating-point number through format_number.
// indent < 0 gives one line.
std::string dump_json(const nlohmann::json& j, int indent = -1);

// Whole-file helpers. Throw Error(kIo) when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// ---- configuration ------------------------------------------------------

// `key = value` per line; '#' starts a comment; blank lines ignored.
struct KeyValues {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
};

KeyValues parse_key_values(std::istream& in);
KeyValues load_key_values(const std::string& path);

struct ConfigKey {
  std::string name;
  std::string default_value;
  std::string help;
};

// Every recognized key with its default, in documentation order.
const std::vector<ConfigKey>& config_keys();

struct RunConfig {
  std::string signals_path;
  std::string prices_path;
  std::string scenarios_path;
  std::string stats_path;
  std::string output_dir = ".";
  double eps = 0.2;
  int bins = uncertainty::kDefaultBins;
  hourahead::Strategy strategy = hourahead::Strategy::kProposed;
  int horizon = 24;
  std::uint64_t seed = 1;
  double c_d = 4.1 / 24.0;
  double eta = 0.92;
  double forecast_std = 0.05;  // relative std of the capacity forecast
  double e0 = 0.0;             // start energy of the offered hour, kWh
  double e0_var = 0.0;
  std::vector<double> eps_sweep;  // extra tolerances for the benchmark
  campaign::CampaignConfig campaign;
};

// Unknown keys and unparsable values throw Error(kValidation).
RunConfig run_config(const KeyValues& kv);

// ---- signals ------------------------------------------------------------

// hour_id,s_up,s_dn,dt_up_min,dt_dn_min,mileage,s_mean
struct AggregateRow {
  long hour_id = 0;
  signals::HourlyAggregate agg;
};
void write_aggregates(std::ostream& out, const std::vector<AggregateRow>& rows);
std::vector<AggregateRow> parse_aggregates(std::istream& in);

// One JSON record per line.
std::string stats_to_json(const uncertainty::SignalStatistics& st);
uncertainty::SignalStatistics stats_from_json(const std::string& line);

// ---- market and fleet ---------------------------------------------------

// hour,c_e_da,c_e_rt,c_rc,c_rp
void write_prices(std::ostream& out, const MarketPrices& prices);
MarketPrices parse_prices(std::istream& in, double c_d);

// One record per (scenario, hour).
void write_scenarios(std::ostream& out, const FleetScenarioSet& set);
FleetScenarioSet parse_scenarios(std::istream& in);

// ---- offers -------------------------------------------------------------

std::string dayahead_to_json(const dayahead::DayAheadSolution& sol);
dayahead::DayAheadSolution dayahead_from_json(const std::string& text);

// One record per hour.
std::string offer_to_json(const hourahead::HourAheadSolution& sol);
hourahead::HourAheadSolution offer_from_json(const std::string& line);
void write_offers(std::ostream& out,
                  const std::vector<hourahead::HourAheadSolution>& offers);
std::vector<hourahead::HourAheadSolution> parse_offers(std::istream& in);

// ---- ledgers and reports ------------------------------------------------

struct LedgerRow {
  std::string strategy;
  double eps = 0.0;
  int day = 0;
  int hour = 0;
  double r_kw = 0.0;
  double p_kw = 0.0;
  double p_da_kw = 0.0;
  double score = 1.0;
  bool regulated = false;
  bool violated = false;
  double regulation_usd = 0.0;
  double cost_der_usd = 0.0;
  double cost_d_usd = 0.0;
  double actual_usd = 0.0;
  double expected_usd = 0.0;
};

// p_kw and p_da_kw are per hour, aligned with `hours`.
std::vector<LedgerRow> ledger_rows(
    const std::string& strategy, double eps, int day,
    const std::vector<simulator::HourSettlement>& hours,
    const std::vector<double>& p_kw, const std::vector<double>& p_da_kw);
std::vector<LedgerRow> ledger_rows(const campaign::CampaignContext& ctx,
                                   const campaign::DayResult& day);
void write_ledger(std::ostream& out, const std::vector<LedgerRow>& rows);
std::vector<LedgerRow> parse_ledger(std::istream& in);

// strategy,day,offer_mwh,score,revenue_usd
struct CampaignRow {
  std::string strategy;
  int day = 0;
  double offer_mwh = 0.0;
  double score = 1.0;
  double revenue_usd = 0.0;
};
std::vector<CampaignRow> campaign_rows(const campaign::CampaignResult& res);
void write_campaign(std::ostream& out, const std::vector<CampaignRow>& rows);
std::vector<CampaignRow> parse_campaign(std::istream& in);
std::string campaign_summary_json(const campaign::CampaignResult& res);

// Per (strategy, eps): mean score over regulated hours, share of regulated
// hours with a clamped step, and mean daily expected and actual revenue.
struct ReportPoint {
  std::string strategy;
  double eps = 0.0;
  int days = 0;
  double score = 1.0;
  double violation_ratio = 0.0;
  double expected_usd = 0.0;
  double actual_usd = 0.0;
};
std::vector<ReportPoint> report_series(const std::vector<LedgerRow>& rows);
void write_report(std::ostream& out, const std::vector<ReportPoint>& pts);
std::vector<ReportPoint> parse_report(std::istream& in);

}  // namespace regcap::io

#endif  // REGCAP_IO_HPP_
