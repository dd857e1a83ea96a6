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


#include "regcap/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "regcap/error.hpp"

namespace regcap::io {

using nlohmann::json;

std::string format_number(double v) {
  if (v == 0.0) return "0";  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string format_money(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

double round9(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

namespace {

void dump_into(std::string& out, const json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::number_float:
      out += std::isfinite(j.get<double>()) ? format_number(j.get<double>())
                                            : "null";
      return;
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(k).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(out, v, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        dump_into(out, j[i], indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path);
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(trim(cur));
  if (!line.empty() && line.back() == sep) out.push_back("");
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v))
    throw_validation("bad number '" + s + "' for " + what);
  return v;
}

long to_long(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size())
    throw_validation("bad integer '" + s + "' for " + what);
  return v;
}

bool to_bool(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw_validation("bad boolean '" + s + "' for " + what);
}

// CSV reader with a fixed header.
class CsvReader {
 public:
  CsvReader(std::istream& in, const std::string& header, std::string name)
      : in_(in), name_(std::move(name)) {
    std::string line;
    if (!std::getline(in_, line) || trim(line) != header)
      throw_validation(name_ + ": expected header '" + header + "'");
    columns_ = split(header, ',').size();
  }

  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (trim(line).empty()) continue;
      fields = split(line, ',');
      if (fields.size() != columns_)
        throw_validation(where() + ": expected " + std::to_string(columns_) +
                         " fields");
      return true;
    }
    return false;
  }

  std::string where() const {
    return name_ + " line " + std::to_string(line_no_ + 1);
  }

 private:
  std::istream& in_;
  std::string name_;
  std::size_t columns_ = 0;
  int line_no_ = 0;
};

std::string csv_join(const std::vector<std::string>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += f[i];
  }
  return s;
}

double num(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw_validation(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

json arr9(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(round9(x));
  return a;
}

std::vector<double> vec(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw_validation(std::string("missing array field '") + key + "'");
  std::vector<double> v;
  for (const json& x : j[key]) {
    if (!x.is_number()) throw_validation(std::string("bad entry in ") + key);
    v.push_back(x.get<double>());
  }
  return v;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw_validation(what + ": " + e.what());
  }
}

template <class F>
void for_each_line(std::istream& in, F f) {
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    try {
      f(line);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(n) + ": " + e.what());
    }
  }
}

}  // namespace

// ---- configuration ------------------------------------------------------

KeyValues parse_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw_validation("config line " + std::to_string(n) +
                       ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw_validation("config line " + std::to_string(n) + ": empty key");
    kv.values[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues load_key_values(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_key_values(in);
}

namespace {

struct KeyDef {
  ConfigKey key;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

#define REGCAP_NUM(name, field, help)                                        \
  KeyDef {                                                                  \
    {name, "", help},                                                       \
        [](RunConfig& c, const std::string& v) { c.field = to_double(v, name); }, \
        [](const RunConfig& c) { return format_number(c.field); }           \
  }
#define REGCAP_INT(name, field, help)                                        \
  KeyDef {                                                                  \
    {name, "", help},                                                       \
        [](RunConfig& c, const std::string& v) {                            \
          c.field = static_cast<decltype(c.field)>(to_long(v, name));       \
        },                                                                  \
        [](const RunConfig& c) { return std::to_string(c.field); }          \
  }
#define REGCAP_BOOL(name, field, help)                                       \
  KeyDef {                                                                  \
    {name, "", help},                                                       \
        [](RunConfig& c, const std::string& v) { c.field = to_bool(v, name); }, \
        [](const RunConfig& c) { return std::string(c.field ? "true" : "false"); } \
  }
#define REGCAP_STR(name, field, help)                                        \
  KeyDef {                                                                  \
    {name, "", help}, [](RunConfig& c, const std::string& v) { c.field = v; }, \
        [](const RunConfig& c) { return c.field; }                          \
  }

const std::vector<KeyDef>& key_defs() {
  static const std::vector<KeyDef> defs = {
      REGCAP_STR("signals", signals_path, "signals CSV (hour_id,step,signal)"),
      REGCAP_STR("prices", prices_path,
                 "prices CSV (hour,c_e_da,c_e_rt,c_rc,c_rp)"),
      REGCAP_STR("scenarios", scenarios_path,
                 "scenario JSONL; generated from the fleet.* keys when empty"),
      REGCAP_STR("stats", stats_path,
                 "signal statistics JSON; fitted from `signals` when empty"),
      REGCAP_STR("output_dir", output_dir, "directory for output files"),
      REGCAP_NUM("eps", eps, "violation tolerance in (0, 0.5]"),
      REGCAP_INT("bins", bins, "equiprobable bins of the rho histogram"),
      KeyDef{{"strategy", "", "proposed, robust, determ or ignoreeffi"},
             [](RunConfig& c, const std::string& v) {
               c.strategy = hourahead::parse_strategy(v);
             },
             [](const RunConfig& c) {
               return std::string(hourahead::to_string(c.strategy));
             }},
      REGCAP_INT("horizon", horizon, "hours per day"),
      REGCAP_INT("seed", seed, "master seed of every random stream"),
      REGCAP_NUM("c_d", c_d, "degradation price, $/kWh discharged"),
      REGCAP_NUM("eta", eta, "charging and discharging efficiency"),
      REGCAP_NUM("forecast_std", forecast_std,
                 "relative std of the capacity forecast around the scenario "
                 "mean"),
      REGCAP_NUM("e0", e0, "expected start energy of the offered hour, kWh"),
      REGCAP_NUM("e0_var", e0_var, "variance of the start energy, kWh^2"),
      KeyDef{{"eps_sweep", "", "comma list of extra tolerances (benchmark)"},
             [](RunConfig& c, const std::string& v) {
               c.eps_sweep.clear();
               for (const std::string& f : split(v, ','))
                 if (!f.empty()) c.eps_sweep.push_back(to_double(f, "eps_sweep"));
             },
             [](const RunConfig& c) {
               std::vector<std::string> f;
               for (double e : c.eps_sweep) f.push_back(format_number(e));
               return csv_join(f);
             }},
      REGCAP_BOOL("moments.squared_scaling", campaign.hour_ahead.squared_scaling,
                  "squared efficiency factors on signal variances"),
      REGCAP_BOOL("hourahead.future_block", campaign.hour_ahead.future_block,
                  "price hour-t energy with the remaining day"),
      REGCAP_BOOL("hourahead.future_all_scenarios",
                  campaign.hour_ahead.future_all_scenarios,
                  "future block over every scenario instead of the mean"),
      REGCAP_NUM("hourahead.future_energy_penalty",
                 campaign.hour_ahead.future_energy_penalty,
                 "$/kWh outside the future energy band"),
      REGCAP_INT("hourahead.energy_checkpoints",
                 campaign.hour_ahead.energy_checkpoints,
                 "extra energy cones inside the hour (0 = end of hour only)"),
      REGCAP_INT("hourahead.max_rounds", campaign.hour_ahead.max_rounds,
                 "cutting-plane round limit"),
      REGCAP_NUM("hourahead.tolerance", campaign.hour_ahead.tolerance,
                 "cone feasibility tolerance"),
      REGCAP_INT("fleet.n_vehicles", campaign.fleet.n_vehicles, "vehicles"),
      REGCAP_NUM("fleet.battery_kwh", campaign.fleet.battery_kwh,
                 "battery size, kWh"),
      REGCAP_NUM("fleet.fraction_low_power", campaign.fleet.fraction_low_power,
                 "share of low-power chargers"),
      REGCAP_NUM("fleet.low_power_kw", campaign.fleet.low_power_kw,
                 "low charger rating, kW"),
      REGCAP_NUM("fleet.high_power_kw", campaign.fleet.high_power_kw,
                 "high charger rating, kW"),
      REGCAP_NUM("fleet.start_hour", campaign.fleet.start_hour,
                 "clock hour of horizon hour 0"),
      REGCAP_NUM("fleet.arrival_mean", campaign.fleet.arrival_mean,
                 "mean plug-in clock hour"),
      REGCAP_NUM("fleet.arrival_std", campaign.fleet.arrival_std,
                 "plug-in std, hours"),
      REGCAP_NUM("fleet.departure_mean", campaign.fleet.departure_mean,
                 "mean plug-out clock hour (may exceed 24)"),
      REGCAP_NUM("fleet.departure_std", campaign.fleet.departure_std,
                 "plug-out std, hours"),
      REGCAP_NUM("fleet.trip_kwh_mean", campaign.fleet.trip_kwh_mean,
                 "mean energy used before plug-in, kWh"),
      REGCAP_NUM("fleet.trip_kwh_std", campaign.fleet.trip_kwh_std,
                 "trip energy std, kWh"),
      REGCAP_NUM("fleet.departure_soc", campaign.fleet.departure_soc,
                 "required state of charge at plug-out"),
      REGCAP_NUM("fleet.noise_std", campaign.fleet.noise_std,
                 "relative envelope noise"),
      REGCAP_INT("campaign.days", campaign.days, "simulated days"),
      REGCAP_INT("campaign.scenarios", campaign.scenarios,
                 "day-ahead scenarios per day"),
      REGCAP_INT("campaign.samples_per_hour", campaign.samples_per_hour,
                 "signal samples per hour"),
      REGCAP_INT("campaign.history_hours", campaign.history_hours,
                 "synthetic signal history, hours"),
      REGCAP_INT("campaign.e0_trajectories", campaign.e0_trajectories,
                 "history hours replayed for the start energy"),
      REGCAP_NUM("price.energy_base", campaign.prices.energy_base,
                 "mean energy price, $/kWh"),
      REGCAP_NUM("price.energy_swing", campaign.prices.energy_swing,
                 "daily energy price amplitude, $/kWh"),
      REGCAP_NUM("price.realtime_premium", campaign.prices.realtime_premium,
                 "real-time over day-ahead energy price"),
      REGCAP_NUM("price.capacity", campaign.prices.capacity,
                 "capacity price, $/kW per hour"),
      REGCAP_NUM("price.performance", campaign.prices.performance,
                 "performance price, $/kW per unit mileage"),
      REGCAP_NUM("price.noise", campaign.prices.noise,
                 "relative hourly price noise"),
      REGCAP_NUM("signal.ar_coefficient", campaign.signal.ar_coefficient,
                 "AR(1) coefficient of synthetic signals"),
      REGCAP_NUM("signal.stationary_std", campaign.signal.stationary_std,
                 "stationary std of synthetic signals"),
      REGCAP_NUM("signal.hourly_bias_std", campaign.signal.hourly_bias_std,
                 "std of the hourly bias of synthetic signals"),
  };
  return defs;
}

#undef REGCAP_NUM
#undef REGCAP_INT
#undef REGCAP_BOOL
#undef REGCAP_STR

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = [] {
    const RunConfig defaults;
    std::vector<ConfigKey> out;
    for (const KeyDef& d : key_defs()) {
      ConfigKey k = d.key;
      k.default_value = d.get(defaults);
      out.push_back(k);
    }
    return out;
  }();
  return keys;
}

RunConfig run_config(const KeyValues& kv) {
  RunConfig c;
  for (const auto& [key, value] : kv.values) {
    const auto& defs = key_defs();
    const auto it = std::find_if(defs.begin(), defs.end(), [&](const KeyDef& d) {
      return d.key.name == key;
    });
    if (it == defs.end()) throw_validation("unknown config key '" + key + "'");
    try {
      it->set(c, value);
    } catch (const Error& e) {
      throw_validation("config key '" + key + "': " + e.what());
    }
  }
  if (!(c.eps > 0.0 && c.eps <= 0.5)) throw_validation("eps must lie in (0, 0.5]");
  for (double e : c.eps_sweep)
    if (!(e > 0.0 && e <= 0.5))
      throw_validation("eps_sweep entries must lie in (0, 0.5]");
  if (c.bins < 5) throw_validation("bins must be >= 5");
  if (c.horizon < 1) throw_validation("horizon must be >= 1");
  if (!(c.eta > 0.0 && c.eta <= 1.0)) throw_validation("eta must lie in (0, 1]");
  if (!(c.c_d >= 0.0)) throw_validation("c_d must be >= 0");
  if (!(c.forecast_std >= 0.0)) throw_validation("forecast_std must be >= 0");
  if (!(c.e0_var >= 0.0)) throw_validation("e0_var must be >= 0");
  if (c.campaign.hour_ahead.energy_checkpoints < 0)
    throw_validation("hourahead.energy_checkpoints must be >= 0");
  c.campaign.eps = c.eps;
  c.campaign.bins = c.bins;
  c.campaign.seed = c.seed;
  c.campaign.horizon = c.horizon;
  c.campaign.fleet.c_d = c.c_d;
  c.campaign.fleet.eta = c.eta;
  c.campaign.validate();
  return c;
}

// ---- signals ------------------------------------------------------------

void write_aggregates(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "hour_id,s_up,s_dn,dt_up_min,dt_dn_min,mileage,s_mean\n";
  for (const AggregateRow& r : rows)
    out << r.hour_id << ',' << format_number(r.agg.s_up) << ','
        << format_number(r.agg.s_dn) << ','
        << format_number(r.agg.dt_up * 60.0) << ','
        << format_number(r.agg.dt_dn * 60.0) << ','
        << format_number(r.agg.mileage) << ',' << format_number(r.agg.s_mean)
        << '\n';
}

std::vector<AggregateRow> parse_aggregates(std::istream& in) {
  CsvReader csv(in, "hour_id,s_up,s_dn,dt_up_min,dt_dn_min,mileage,s_mean",
                "aggregates CSV");
  std::vector<AggregateRow> rows;
  std::vector<std::string> f;
  while (csv.next(f)) {
    AggregateRow r;
    const std::string w = csv.where();
    r.hour_id = to_long(f[0], w);
    r.agg.s_up = to_double(f[1], w);
    r.agg.s_dn = to_double(f[2], w);
    r.agg.dt_up = to_double(f[3], w) / 60.0;
    r.agg.dt_dn = to_double(f[4], w) / 60.0;
    r.agg.mileage = to_double(f[5], w);
    r.agg.s_mean = to_double(f[6], w);
    rows.push_back(r);
  }
  return rows;
}

std::string stats_to_json(const uncertainty::SignalStatistics& st) {
  json j = json::object();
  j["mean_s1"] = round9(st.mean_s1);
  j["var_s1"] = round9(st.var_s1);
  j["mean_sH"] = round9(st.mean_sH);
  j["var_sH"] = round9(st.var_sH);
  j["rho"] = round9(st.rho);
  j["mean_mileage"] = round9(st.mean_mileage);
  j["min_sH"] = round9(st.min_sH);
  j["max_sH"] = round9(st.max_sH);
  j["sample_count"] = st.sample_count;
  j["bins"] = st.bins;
  return dump_json(j);
}

uncertainty::SignalStatistics stats_from_json(const std::string& line) {
  const json j = parse_json(line, "statistics JSON");
  uncertainty::SignalStatistics st;
  st.mean_s1 = num(j, "mean_s1");
  st.var_s1 = num(j, "var_s1");
  st.mean_sH = num(j, "mean_sH");
  st.var_sH = num(j, "var_sH");
  st.rho = num(j, "rho");
  st.mean_mileage = num(j, "mean_mileage");
  st.min_sH = num(j, "min_sH");
  st.max_sH = num(j, "max_sH");
  st.sample_count = static_cast<long>(num(j, "sample_count"));
  st.bins = static_cast<int>(num(j, "bins"));
  if (st.var_s1 < 0.0 || st.var_sH < 0.0 || st.rho < 0.0)
    throw_validation("statistics JSON: negative variance or radius");
  return st;
}

// ---- market and fleet ---------------------------------------------------

void write_prices(std::ostream& out, const MarketPrices& prices) {
  out << "hour,c_e_da,c_e_rt,c_rc,c_rp\n";
  for (std::size_t t = 0; t < prices.hours.size(); ++t) {
    const HourPrices& h = prices.hours[t];
    out << t << ',' << format_number(h.c_e_da) << ','
        << format_number(h.c_e_rt) << ',' << format_number(h.c_rc) << ','
        << format_number(h.c_rp) << '\n';
  }
}

MarketPrices parse_prices(std::istream& in, double c_d) {
  CsvReader csv(in, "hour,c_e_da,c_e_rt,c_rc,c_rp", "prices CSV");
  MarketPrices p;
  p.c_d = c_d;
  std::vector<std::string> f;
  while (csv.next(f)) {
    const std::string w = csv.where();
    if (to_long(f[0], w) != static_cast<long>(p.hours.size()))
      throw_validation(w + ": hours must run 0, 1, 2, ...");
    p.hours.push_back({to_double(f[1], w), to_double(f[2], w),
                       to_double(f[3], w), to_double(f[4], w)});
  }
  if (p.hours.empty()) throw_validation("prices CSV has no hours");
  p.validate();
  return p;
}

void write_scenarios(std::ostream& out, const FleetScenarioSet& set) {
  for (int w = 0; w < set.size(); ++w) {
    const FleetScenario& sc = set.scenarios[w];
    for (std::size_t t = 0; t < sc.hours.size(); ++t) {
      const ScenarioHour& h = sc.hours[t];
      json j = json::object();
      j["scenario"] = w;
      j["hour"] = t;
      j["probability"] = round9(sc.probability);
      j["s_up"] = round9(h.s_up);
      j["s_dn"] = round9(h.s_dn);
      j["dt_up"] = round9(h.dt_up);
      j["dt_dn"] = round9(h.dt_dn);
      j["mileage"] = round9(h.mileage);
      j["p_plus"] = round9(h.p_plus);
      j["p_minus"] = round9(h.p_minus);
      j["e_minus"] = round9(h.e_minus);
      j["e_plus"] = round9(h.e_plus);
      out << dump_json(j) << '\n';
    }
  }
}

FleetScenarioSet parse_scenarios(std::istream& in) {
  FleetScenarioSet set;
  for_each_line(in, [&](const std::string& line) {
    const json j = parse_json(line, "scenario record");
    const int w = static_cast<int>(num(j, "scenario"));
    const int t = static_cast<int>(num(j, "hour"));
    if (w != set.size() - 1 && w != set.size())
      throw_validation("scenario records must be grouped and numbered 0, 1, ...");
    if (w == set.size()) {
      set.scenarios.emplace_back();
      set.scenarios.back().probability = num(j, "probability");
    }
    FleetScenario& sc = set.scenarios.back();
    if (t != static_cast<int>(sc.hours.size()))
      throw_validation("scenario hours must run 0, 1, 2, ...");
    ScenarioHour h;
    h.s_up = num(j, "s_up");
    h.s_dn = num(j, "s_dn");
    h.dt_up = num(j, "dt_up");
    h.dt_dn = num(j, "dt_dn");
    h.mileage = num(j, "mileage");
    h.p_plus = num(j, "p_plus");
    h.p_minus = num(j, "p_minus");
    h.e_minus = num(j, "e_minus");
    h.e_plus = num(j, "e_plus");
    sc.hours.push_back(h);
  });
  if (set.scenarios.empty()) throw_validation("scenario file is empty");
  // written probabilities carry 9 digits; renormalize within that error
  double total = 0.0;
  for (const FleetScenario& sc : set.scenarios) total += sc.probability;
  if (std::abs(total - 1.0) < 1e-7)
    for (FleetScenario& sc : set.scenarios) sc.probability /= total;
  set.validate();
  return set;
}

// ---- offers -------------------------------------------------------------

std::string dayahead_to_json(const dayahead::DayAheadSolution& sol) {
  json j = json::object();
  j["p_da"] = arr9(sol.p_da);
  j["r_da"] = arr9(sol.r_da);
  j["objective"] = round9(sol.objective);
  j["regulation_revenue"] = round9(sol.regulation_revenue);
  j["energy_cost"] = round9(sol.energy_cost);
  j["degradation_cost"] = round9(sol.degradation_cost);
  j["bound"] = round9(sol.bound);
  j["gap"] = round9(sol.gap);
  j["nodes"] = sol.nodes;
  json cells = json::array();
  for (const auto& row : sol.cells) {
    json r = json::array();
    for (const dayahead::CellDecision& c : row)
      r.push_back({{"r", round9(c.r)},
                   {"pc_up", round9(c.pc_up)},
                   {"pc_dn", round9(c.pc_dn)},
                   {"pd_up", round9(c.pd_up)},
                   {"pd_dn", round9(c.pd_dn)},
                   {"d_up", round9(c.d_up)},
                   {"d_dn", round9(c.d_dn)},
                   {"discharged", round9(c.discharged)},
                   {"energy", round9(c.energy)}});
    cells.push_back(r);
  }
  j["cells"] = cells;
  return dump_json(j, 1) + "\n";
}

dayahead::DayAheadSolution dayahead_from_json(const std::string& text) {
  const json j = parse_json(text, "day-ahead JSON");
  dayahead::DayAheadSolution s;
  s.p_da = vec(j, "p_da");
  s.r_da = vec(j, "r_da");
  if (s.p_da.size() != s.r_da.size() || s.p_da.empty())
    throw_validation("day-ahead JSON: p_da and r_da must match and be nonempty");
  s.objective = num(j, "objective");
  s.regulation_revenue = num(j, "regulation_revenue");
  s.energy_cost = num(j, "energy_cost");
  s.degradation_cost = num(j, "degradation_cost");
  s.bound = num(j, "bound");
  s.gap = num(j, "gap");
  s.nodes = static_cast<long>(num(j, "nodes"));
  if (j.contains("cells")) {
    for (const json& row : j["cells"]) {
      std::vector<dayahead::CellDecision> r;
      for (const json& c : row) {
        dayahead::CellDecision d;
        d.r = num(c, "r");
        d.pc_up = num(c, "pc_up");
        d.pc_dn = num(c, "pc_dn");
        d.pd_up = num(c, "pd_up");
        d.pd_dn = num(c, "pd_dn");
        d.d_up = num(c, "d_up");
        d.d_dn = num(c, "d_dn");
        d.discharged = num(c, "discharged");
        d.energy = num(c, "energy");
        r.push_back(d);
      }
      s.cells.push_back(std::move(r));
    }
  }
  return s;
}

std::string offer_to_json(const hourahead::HourAheadSolution& sol) {
  json j = json::object();
  j["hour"] = sol.hour;
  j["strategy"] = hourahead::to_string(sol.strategy);
  j["r"] = round9(sol.r);
  j["p"] = round9(sol.p);
  j["dp"] = round9(sol.dp);
  j["objective"] = round9(sol.objective);
  j["regulation_revenue"] = round9(sol.regulation_revenue);
  j["deviation_cost"] = round9(sol.deviation_cost);
  j["degradation_cost"] = round9(sol.degradation_cost);
  j["future_value"] = round9(sol.future_value);
  json slack = json::array();
  for (double g : sol.cone_values) slack.push_back(round9(-g));
  j["cone_slacks"] = slack;
  j["eps"] = round9(sol.eps);
  j["eps_prime"] = round9(sol.eps_prime);
  j["rho"] = round9(sol.rho);
  j["saturated"] = uncertainty::is_saturated(sol.eps_prime);
  j["rounds"] = sol.rounds;
  j["converged"] = sol.converged;
  j["shrunk"] = sol.shrunk;
  j["infeasible"] = sol.infeasible;
  j["expected_discharge"] = arr9(sol.expected_discharge);
  return dump_json(j);
}

hourahead::HourAheadSolution offer_from_json(const std::string& line) {
  const json j = parse_json(line, "offer record");
  hourahead::HourAheadSolution s;
  s.hour = static_cast<int>(num(j, "hour"));
  if (!j.contains("strategy") || !j["strategy"].is_string())
    throw_validation("offer record: missing strategy");
  s.strategy = hourahead::parse_strategy(j["strategy"].get<std::string>());
  s.r = num(j, "r");
  s.p = num(j, "p");
  s.dp = num(j, "dp");
  s.objective = num(j, "objective");
  s.regulation_revenue = num(j, "regulation_revenue");
  s.deviation_cost = num(j, "deviation_cost");
  s.degradation_cost = num(j, "degradation_cost");
  s.future_value = num(j, "future_value");
  const std::vector<double> slack = vec(j, "cone_slacks");
  if (slack.size() != 4) throw_validation("offer record: need 4 cone slacks");
  for (int k = 0; k < 4; ++k) s.cone_values[k] = -slack[k];
  s.eps = num(j, "eps");
  s.eps_prime = num(j, "eps_prime");
  s.rho = num(j, "rho");
  s.rounds = static_cast<int>(num(j, "rounds"));
  s.converged = j.value("converged", false);
  s.shrunk = j.value("shrunk", false);
  s.infeasible = j.value("infeasible", false);
  s.expected_discharge = vec(j, "expected_discharge");
  if (s.r < 0.0) throw_validation("offer record: negative capacity");
  return s;
}

void write_offers(std::ostream& out,
                  const std::vector<hourahead::HourAheadSolution>& offers) {
  for (const auto& o : offers) out << offer_to_json(o) << '\n';
}

std::vector<hourahead::HourAheadSolution> parse_offers(std::istream& in) {
  std::vector<hourahead::HourAheadSolution> out;
  for_each_line(in, [&](const std::string& line) {
    out.push_back(offer_from_json(line));
  });
  return out;
}

// ---- ledgers and reports ------------------------------------------------

std::vector<LedgerRow> ledger_rows(
    const std::string& strategy, double eps, int day,
    const std::vector<simulator::HourSettlement>& hours,
    const std::vector<double>& p_kw, const std::vector<double>& p_da_kw) {
  if (p_kw.size() != hours.size() || p_da_kw.size() != hours.size())
    throw_argument("ledger_rows: per-hour vectors must align");
  std::vector<LedgerRow> rows;
  for (std::size_t k = 0; k < hours.size(); ++k) {
    const simulator::HourSettlement& h = hours[k];
    LedgerRow r;
    r.strategy = strategy;
    r.eps = eps;
    r.day = day;
    r.hour = h.hour;
    r.r_kw = h.r;
    r.p_kw = p_kw[k];
    r.p_da_kw = p_da_kw[k];
    r.score = h.score;
    r.regulated = h.regulated;
    r.violated = h.violated;
    r.regulation_usd = h.regulation_revenue;
    r.cost_der_usd = h.cost_der;
    r.cost_d_usd = h.cost_d;
    r.actual_usd = h.actual_revenue;
    r.expected_usd = h.expected_revenue;
    rows.push_back(r);
  }
  return rows;
}

std::vector<LedgerRow> ledger_rows(const campaign::CampaignContext& ctx,
                                   const campaign::DayResult& day) {
  std::vector<double> p, p_da;
  const auto& da = ctx.days.at(day.day).da;
  for (const auto& o : day.offers) {
    p.push_back(o.p);
    p_da.push_back(da.p_da.at(o.hour));
  }
  return ledger_rows(hourahead::to_string(day.strategy), day.eps, day.day,
                     day.hours, p, p_da);
}

namespace {
constexpr const char* kLedgerHeader =
    "strategy,eps,day,hour,r_kw,p_kw,p_da_kw,score,regulated,violated,"
    "regulation_usd,cost_der_usd,cost_d_usd,actual_usd,expected_usd";
}

void write_ledger(std::ostream& out, const std::vector<LedgerRow>& rows) {
  out << kLedgerHeader << '\n';
  for (const LedgerRow& r : rows)
    out << csv_join({r.strategy, format_number(r.eps), std::to_string(r.day),
                     std::to_string(r.hour), format_number(r.r_kw),
                     format_number(r.p_kw), format_number(r.p_da_kw),
                     format_number(r.score), r.regulated ? "1" : "0",
                     r.violated ? "1" : "0", format_money(r.regulation_usd),
                     format_money(r.cost_der_usd), format_money(r.cost_d_usd),
                     format_money(r.actual_usd), format_money(r.expected_usd)})
        << '\n';
}

std::vector<LedgerRow> parse_ledger(std::istream& in) {
  CsvReader csv(in, kLedgerHeader, "ledger CSV");
  std::vector<LedgerRow> rows;
  std::vector<std::string> f;
  while (csv.next(f)) {
    const std::string w = csv.where();
    LedgerRow r;
    r.strategy = f[0];
    r.eps = to_double(f[1], w);
    r.day = static_cast<int>(to_long(f[2], w));
    r.hour = static_cast<int>(to_long(f[3], w));
    r.r_kw = to_double(f[4], w);
    r.p_kw = to_double(f[5], w);
    r.p_da_kw = to_double(f[6], w);
    r.score = to_double(f[7], w);
    r.regulated = to_bool(f[8], w);
    r.violated = to_bool(f[9], w);
    r.regulation_usd = to_double(f[10], w);
    r.cost_der_usd = to_double(f[11], w);
    r.cost_d_usd = to_double(f[12], w);
    r.actual_usd = to_double(f[13], w);
    r.expected_usd = to_double(f[14], w);
    rows.push_back(r);
  }
  return rows;
}

std::vector<CampaignRow> campaign_rows(const campaign::CampaignResult& res) {
  std::vector<CampaignRow> rows;
  for (const campaign::DayResult& d : res.days)
    rows.push_back({hourahead::to_string(d.strategy), d.day,
                    d.summary.offer_mwh, d.summary.mean_score,
                    d.summary.actual_revenue});
  return rows;
}

void write_campaign(std::ostream& out, const std::vector<CampaignRow>& rows) {
  out << "strategy,day,offer_mwh,score,revenue_usd\n";
  for (const CampaignRow& r : rows)
    out << csv_join({r.strategy, std::to_string(r.day),
                     format_number(r.offer_mwh), format_number(r.score),
                     format_money(r.revenue_usd)})
        << '\n';
}

std::vector<CampaignRow> parse_campaign(std::istream& in) {
  CsvReader csv(in, "strategy,day,offer_mwh,score,revenue_usd", "campaign CSV");
  std::vector<CampaignRow> rows;
  std::vector<std::string> f;
  while (csv.next(f)) {
    const std::string w = csv.where();
    rows.push_back({f[0], static_cast<int>(to_long(f[1], w)),
                    to_double(f[2], w), to_double(f[3], w),
                    to_double(f[4], w)});
  }
  return rows;
}

std::string campaign_summary_json(const campaign::CampaignResult& res) {
  json arr = json::array();
  for (const campaign::StrategySummary& s : res.summaries)
    arr.push_back({{"strategy", hourahead::to_string(s.strategy)},
                   {"eps", round9(s.eps)},
                   {"days", s.days},
                   {"offer_mwh_per_day", round9(s.offer_mwh)},
                   {"score", round9(s.score)},
                   {"revenue_usd_per_day", round9(s.revenue)},
                   {"expected_revenue_usd_per_day", round9(s.expected_revenue)},
                   {"regulated_hours", s.regulated_hours},
                   {"violated_hours", s.violated_hours}});
  return dump_json(json{{"strategies", arr}}, 1) + "\n";
}

std::vector<ReportPoint> report_series(const std::vector<LedgerRow>& rows) {
  struct Acc {
    std::set<int> days;
    double score = 0.0;
    int regulated = 0;
    int violated = 0;
    double expected = 0.0;
    double actual = 0.0;
  };
  // keyed by first appearance so the output follows the ledger order
  std::vector<std::pair<std::string, double>> order;
  std::map<std::pair<std::string, double>, Acc> acc;
  for (const LedgerRow& r : rows) {
    const auto key = std::make_pair(r.strategy, r.eps);
    if (!acc.count(key)) order.push_back(key);
    Acc& a = acc[key];
    a.days.insert(r.day);
    if (r.regulated) {
      a.score += r.score;
      ++a.regulated;
      a.violated += r.violated;
    }
    a.expected += r.expected_usd;
    a.actual += r.actual_usd;
  }
  std::vector<ReportPoint> out;
  for (const auto& key : order) {
    const Acc& a = acc[key];
    ReportPoint p;
    p.strategy = key.first;
    p.eps = key.second;
    p.days = static_cast<int>(a.days.size());
    p.score = a.regulated ? a.score / a.regulated : 1.0;
    p.violation_ratio =
        a.regulated ? static_cast<double>(a.violated) / a.regulated : 0.0;
    p.expected_usd = a.expected / p.days;
    p.actual_usd = a.actual / p.days;
    out.push_back(p);
  }
  return out;
}

void write_report(std::ostream& out, const std::vector<ReportPoint>& pts) {
  out << "strategy,eps,confidence,days,score,violation_ratio,"
         "expected_usd_per_day,actual_usd_per_day\n";
  for (const ReportPoint& p : pts)
    out << csv_join({p.strategy, format_number(p.eps),
                     format_number(1.0 - p.eps), std::to_string(p.days),
                     format_number(p.score), format_number(p.violation_ratio),
                     format_money(p.expected_usd), format_money(p.actual_usd)})
        << '\n';
}

std::vector<ReportPoint> parse_report(std::istream& in) {
  CsvReader csv(in,
                "strategy,eps,confidence,days,score,violation_ratio,"
                "expected_usd_per_day,actual_usd_per_day",
                "report CSV");
  std::vector<ReportPoint> pts;
  std::vector<std::string> f;
  while (csv.next(f)) {
    const std::string w = csv.where();
    ReportPoint p;
    p.strategy = f[0];
    p.eps = to_double(f[1], w);
    p.days = static_cast<int>(to_long(f[3], w));
    p.score = to_double(f[4], w);
    p.violation_ratio = to_double(f[5], w);
    p.expected_usd = to_double(f[6], w);
    p.actual_usd = to_double(f[7], w);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace regcap::io
