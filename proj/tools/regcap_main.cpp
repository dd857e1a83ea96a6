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


// regcap command-line tool. Talks to the library only through regcap.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regcap/regcap.h"

namespace {

using ConfigPtr = std::unique_ptr<regcap_config, decltype(&regcap_config_free)>;

int report_error(regcap_status s) {
  std::cerr << regcap_last_error_json() << '\n';
  return static_cast<int>(s);
}

int usage_error(const std::string& msg) {
  std::cerr << nlohmann::json{{"status", 1}, {"kind", "argument"},
                              {"message", msg}}
                   .dump()
            << '\n';
  return 1;
}

std::string key_footer() {
  std::string s = "Configuration keys (config file `key = value`, or --set):\n";
  for (size_t i = 0; i < regcap_config_key_count(); ++i) {
    std::string line = "  ";
    line += regcap_config_key_name(i);
    line += " [";
    line += regcap_config_key_default(i);
    line += "]";
    if (line.size() < 40) line.resize(40, ' ');
    s += line + "  " + regcap_config_key_help(i) + "\n";
  }
  s += "\nExit codes: 0 ok, 1 usage, 2 file error, 3 validation failure,\n"
       "4 solver failure, 5 internal error. Errors go to stderr as JSON.";
  return s;
}

std::string get(const regcap_config* cfg, const char* key) {
  char* v = nullptr;
  if (regcap_config_get(cfg, key, &v) != REGCAP_OK) return "";
  std::string out = v;
  regcap_string_free(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regcap: regulation capacity offers for an EV fleet"};
  app.footer(key_footer());
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  std::string eps, seed, strategy, output_dir, horizon, signals, prices,
      scenarios, stats;
  app.add_option("-c,--config", config_path, "configuration file");
  app.add_option("--set", sets, "override a key, KEY=VALUE (repeatable)");
  app.add_option("--eps", eps, "same as --set eps=...");
  app.add_option("--seed", seed, "same as --set seed=...");
  app.add_option("--strategy", strategy, "same as --set strategy=...");
  app.add_option("--output-dir", output_dir, "same as --set output_dir=...");
  app.add_option("--horizon", horizon, "same as --set horizon=...");
  app.add_option("--signals", signals, "same as --set signals=...");
  app.add_option("--prices", prices, "same as --set prices=...");
  app.add_option("--scenarios", scenarios, "same as --set scenarios=...");
  app.add_option("--stats", stats, "same as --set stats=...");

  std::string out, dayahead, offers, dispatch, ledger;
  int hour = -1;

  auto* agg = app.add_subcommand("aggregate", "signals CSV to hourly aggregates");
  agg->add_option("-o,--out", out, "output CSV [output_dir/aggregates.csv]");

  auto* st = app.add_subcommand("stats", "signal statistics JSON");
  st->add_option("-o,--out", out, "output JSON [output_dir/stats.json]");

  auto* da = app.add_subcommand("offer-da", "solve the day-ahead offer");
  da->add_option("-o,--out", out, "output JSON [output_dir/dayahead.json]");

  auto* ha = app.add_subcommand("offer-ha", "hour-ahead offers");
  ha->add_option("--dayahead", dayahead,
                 "day-ahead JSON; solved from the config when omitted");
  ha->add_option("--hour", hour, "single hour; every hour when omitted");
  ha->add_option("-o,--out", out, "output JSONL [output_dir/offers.jsonl]");

  auto* sim = app.add_subcommand("simulate", "dispatch offers against signals");
  sim->add_option("--offers", offers, "offers JSONL")->required();
  sim->add_option("--dayahead", dayahead,
                  "day-ahead JSON; offers' baselines are used when omitted");
  sim->add_option("--dispatch", dispatch,
                  "dispatch JSONL [output_dir/dispatch.jsonl]");
  sim->add_option("--ledger", ledger, "ledger CSV [output_dir/ledger.csv]");

  auto* bench = app.add_subcommand(
      "benchmark", "synthetic campaign comparing the four strategies");

  auto* rep = app.add_subcommand("report", "ledger CSV to plot-ready series");
  rep->add_option("--ledger", ledger, "ledger CSV")->required();
  rep->add_option("-o,--out", out, "output CSV [output_dir/report.csv]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  regcap_config* raw = nullptr;
  if (regcap_config_new(&raw) != REGCAP_OK) return report_error(REGCAP_ERR_INTERNAL);
  ConfigPtr cfg(raw, &regcap_config_free);

  if (!config_path.empty()) {
    const regcap_status s = regcap_config_load(cfg.get(), config_path.c_str());
    if (s != REGCAP_OK) return report_error(s);
  }
  std::vector<std::pair<std::string, std::string>> overrides;
  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) return usage_error("--set needs KEY=VALUE: " + kv);
    overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  const std::pair<const char*, std::string*> flags[] = {
      {"eps", &eps},           {"seed", &seed},       {"strategy", &strategy},
      {"output_dir", &output_dir}, {"horizon", &horizon}, {"signals", &signals},
      {"prices", &prices},     {"scenarios", &scenarios}, {"stats", &stats}};
  for (const auto& [key, value] : flags)
    if (!value->empty()) overrides.emplace_back(key, *value);
  for (const auto& [k, v] : overrides) {
    const regcap_status s = regcap_config_set(cfg.get(), k.c_str(), v.c_str());
    if (s != REGCAP_OK) return report_error(s);
  }

  const char* out_c = out.empty() ? nullptr : out.c_str();
  char* summary = nullptr;
  regcap_status s = REGCAP_OK;
  if (agg->parsed()) {
    s = regcap_aggregate(cfg.get(), out_c, &summary);
  } else if (st->parsed()) {
    s = regcap_stats(cfg.get(), out_c, &summary);
  } else if (da->parsed()) {
    s = regcap_offer_da(cfg.get(), out_c, &summary);
  } else if (ha->parsed()) {
    s = regcap_offer_ha(cfg.get(), dayahead.c_str(), hour, out_c, &summary);
  } else if (sim->parsed()) {
    s = regcap_simulate(cfg.get(), offers.c_str(), dayahead.c_str(),
                        dispatch.c_str(), ledger.c_str(), &summary);
  } else if (bench->parsed()) {
    s = regcap_benchmark(cfg.get(), &summary);
  } else if (rep->parsed()) {
    std::string path = out;
    if (path.empty()) path = get(cfg.get(), "output_dir") + "/report.csv";
    s = regcap_report(ledger.c_str(), path.c_str(), &summary);
  }
  if (s != REGCAP_OK) return report_error(s);
  if (summary) {
    std::cout << summary << '\n';
    regcap_string_free(summary);
  }
  return 0;
}
