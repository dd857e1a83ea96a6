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


// Runs the regcap executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "regcap/regcap.h"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const char* name) {
  auto p = fs::temp_directory_path() / "regcap_cli_test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Outcome run(const fs::path& dir, const std::string& args) {
  const std::string cmd = std::string("\"") + REGCAP_CLI + "\" " + args +
                          " >\"" + (dir / "stdout").string() + "\" 2>\"" +
                          (dir / "stderr").string() + "\"";
  const int status = std::system(cmd.c_str());
  Outcome r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "stdout");
  r.err = slurp(dir / "stderr");
  return r;
}

const std::string kData = REGCAP_TEST_DATA;

TEST(Cli, HelpDocumentsEveryKey) {
  const auto dir = scratch("help");
  const Outcome r = run(dir, "--help");
  ASSERT_EQ(r.code, 0);
  for (size_t i = 0; i < regcap_config_key_count(); ++i)
    EXPECT_NE(r.out.find(regcap_config_key_name(i)), std::string::npos)
        << regcap_config_key_name(i);
  for (const char* cmd : {"aggregate", "stats", "offer-da", "offer-ha",
                          "simulate", "benchmark", "report"})
    EXPECT_NE(r.out.find(cmd), std::string::npos) << cmd;
}

TEST(Cli, AggregateZeroHour) {
  const auto dir = scratch("agg");
  const Outcome r = run(dir, "--set campaign.samples_per_hour=4 --signals " +
                             kData + "/zero_hour.csv aggregate -o " +
                             (dir / "a.csv").string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir / "a.csv"),
            "hour_id,s_up,s_dn,dt_up_min,dt_dn_min,mileage,s_mean\n"
            "0,0,0,60,0,0,0\n");
}

TEST(Cli, ExitCodesAndErrorRecords) {
  const auto dir = scratch("codes");
  struct Case {
    std::string args;
    int code;
    const char* kind;
  };
  const Case cases[] = {
      {"--signals /nonexistent/s.csv stats", 2, "io"},
      {"--eps 0.8 stats", 3, "validation"},
      {"--set colour=red stats", 3, "validation"},
      {"--horizon 1 --scenarios " + kData + "/unreachable.jsonl offer-da", 4,
       "solver"},
      {"frobnicate", 1, "argument"},
      {"report", 1, "argument"},
  };
  for (const Case& c : cases) {
    const Outcome r = run(dir, "--output-dir " + dir.string() + " " + c.args);
    EXPECT_EQ(r.code, c.code) << c.args;
    const auto j = nlohmann::json::parse(r.err, nullptr, false);
    ASSERT_FALSE(j.is_discarded()) << r.err;
    EXPECT_EQ(j["kind"], c.kind) << c.args;
    EXPECT_EQ(j["status"], c.code) << c.args;
  }
}

TEST(Cli, OfferHaAtHalfWithoutVarianceIsDeterministicStrategy) {
  const auto dir = scratch("half");
  const std::string base = "-c " + kData + "/bench_small.conf --output-dir " +
                           dir.string();
  ASSERT_EQ(run(dir, base + " offer-da").code, 0);
  const std::string common =
      base + " --stats " + kData +
      "/zero_stats.json --eps 0.5 --set forecast_std=0 --set e0_var=0 ";
  const std::string da = " offer-ha --dayahead " + (dir / "dayahead.json").string();
  ASSERT_EQ(run(dir, common + "--strategy proposed" + da + " -o " +
                         (dir / "p.jsonl").string())
                .code,
            0);
  ASSERT_EQ(run(dir, common + "--strategy determ" + da + " -o " +
                         (dir / "d.jsonl").string())
                .code,
            0);
  std::string det = slurp(dir / "d.jsonl");
  const std::string prop = slurp(dir / "p.jsonl");
  ASSERT_NE(det.find("\"Determ\""), std::string::npos);
  for (size_t at; (at = det.find("\"Determ\"")) != std::string::npos;)
    det.replace(at, 8, "\"Proposed\"");
  EXPECT_EQ(det, prop);
}

TEST(Cli, OfferSimulateReportPipeline) {
  const auto dir = scratch("pipe");
  const std::string base = "-c " + kData + "/bench_small.conf --output-dir " +
                           dir.string();
  ASSERT_EQ(run(dir, base + " offer-da").code, 0);
  const std::string da = (dir / "dayahead.json").string();
  Outcome r = run(dir, base + " offer-ha --dayahead " + da);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["hours"], 24);
  r = run(dir, base + " offer-ha --hour 5 --dayahead " + da + " -o " +
                   (dir / "h5.jsonl").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string h5 = slurp(dir / "h5.jsonl");
  EXPECT_EQ(std::count(h5.begin(), h5.end(), '\n'), 1);
  EXPECT_EQ(nlohmann::json::parse(h5)["hour"], 5);

  r = run(dir, base + " simulate --offers " + (dir / "offers.jsonl").string() +
                   " --dayahead " + da);
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string ledger = slurp(dir / "ledger.csv");
  EXPECT_EQ(std::count(ledger.begin(), ledger.end(), '\n'), 25);
  const std::string disp = slurp(dir / "dispatch.jsonl");
  EXPECT_EQ(std::count(disp.begin(), disp.end(), '\n'), 24);

  r = run(dir, "report --ledger " + (dir / "ledger.csv").string() + " -o " +
                   (dir / "report.csv").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string rep = slurp(dir / "report.csv");
  EXPECT_EQ(rep.rfind("strategy,eps,confidence,", 0), 0u);
  EXPECT_NE(rep.find("\nProposed,0.2,0.8,1,"), std::string::npos);
}

TEST(Cli, FlagsOverrideConfigFile) {
  const auto dir = scratch("flags");
  std::ofstream(dir / "c.conf") << "eps = 0.3\nstrategy = robust\n"
                                << "fleet.n_vehicles = 200\nhorizon = 6\n";
  const Outcome r = run(dir, "-c " + (dir / "c.conf").string() +
                             " --eps 0.1 --output-dir " + dir.string() +
                             " offer-ha --hour 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(dir / "offers.jsonl"));
  EXPECT_EQ(j["strategy"], "Robust");
  EXPECT_EQ(j["hour"], 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["strategy"], "Robust");
}

TEST(Cli, BenchmarkMatchesGoldenAndIsReproducible) {
  const auto a = scratch("bench_a");
  const auto b = scratch("bench_b");
  const std::string conf = "-c " + kData + "/bench_small.conf";
  ASSERT_EQ(run(a, conf + " --output-dir " + a.string() + " benchmark").code, 0);
  ASSERT_EQ(run(b, conf + " --output-dir " + b.string() + " benchmark").code, 0);
  EXPECT_EQ(slurp(a / "benchmark.csv"), slurp(kData + "/bench_small_golden.csv"));
  for (const char* f : {"benchmark.csv", "campaign.csv", "ledger.csv",
                        "summary.json"})
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  const std::string camp = slurp(a / "campaign.csv");
  EXPECT_EQ(std::count(camp.begin(), camp.end(), '\n'), 1 + 4 * 2);

  // four strategies at eps plus the two sweep points
  const Outcome r = run(a, "report --ledger " + (a / "ledger.csv").string() +
                           " -o " + (a / "report.csv").string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["series"], 6);
}

}  // namespace
