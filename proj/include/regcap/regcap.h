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


#ifndef REGCAP_REGCAP_H_
#define REGCAP_REGCAP_H_

/* C interface of the regcap library.
 *
 * Every call returns a regcap_status. On failure the message of the last
 * error on the calling thread is available from regcap_last_error() and as
 * a one-line JSON record from regcap_last_error_json().
 *
 * Strings returned through char** belong to the caller and are released
 * with regcap_string_free(). */

#include <stddef.h>

#if defined(_WIN32)
#define REGCAP_API __declspec(dllexport)
#else
#define REGCAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum regcap_status {
  REGCAP_OK = 0,
  REGCAP_ERR_ARGUMENT = 1,
  REGCAP_ERR_IO = 2,
  REGCAP_ERR_VALIDATION = 3,
  REGCAP_ERR_SOLVER = 4,
  REGCAP_ERR_INTERNAL = 5
} regcap_status;

typedef struct regcap_config regcap_config;

REGCAP_API const char* regcap_version(void);
REGCAP_API const char* regcap_last_error(void);
REGCAP_API const char* regcap_last_error_json(void);
REGCAP_API void regcap_string_free(char* s);

/* ---- configuration ---- */

REGCAP_API regcap_status regcap_config_new(regcap_config** out);
REGCAP_API void regcap_config_free(regcap_config* cfg);
/* Reads `key = value` lines; later values override earlier ones. */
REGCAP_API regcap_status regcap_config_load(regcap_config* cfg,
                                            const char* path);
/* Unknown keys fail with REGCAP_ERR_VALIDATION. */
REGCAP_API regcap_status regcap_config_set(regcap_config* cfg,
                                           const char* key, const char* value);
/* Current value, or the default when unset. */
REGCAP_API regcap_status regcap_config_get(const regcap_config* cfg,
                                           const char* key, char** value);
/* Checks every value together (ranges, fleet parameters). */
REGCAP_API regcap_status regcap_config_validate(const regcap_config* cfg);

/* Recognized keys, in documentation order. Pointers stay valid for the
 * life of the process; NULL past the end. */
REGCAP_API size_t regcap_config_key_count(void);
REGCAP_API const char* regcap_config_key_name(size_t i);
REGCAP_API const char* regcap_config_key_default(size_t i);
REGCAP_API const char* regcap_config_key_help(size_t i);

/* ---- commands ----
 * Each command reads the inputs named by the configuration, writes its
 * files and, when summary is not NULL, returns a one-line JSON summary. */

/* signals -> hourly aggregates CSV */
REGCAP_API regcap_status regcap_aggregate(const regcap_config* cfg,
                                          const char* out_path,
                                          char** summary);
/* signals -> statistics JSON */
REGCAP_API regcap_status regcap_stats(const regcap_config* cfg,
                                      const char* out_path, char** summary);
/* prices and scenarios -> day-ahead solution JSON */
REGCAP_API regcap_status regcap_offer_da(const regcap_config* cfg,
                                         const char* out_path, char** summary);
/* day-ahead JSON -> hour-ahead offers, one JSON record per hour. hour < 0
 * offers every hour of the horizon. */
REGCAP_API regcap_status regcap_offer_ha(const regcap_config* cfg,
                                         const char* dayahead_path, int hour,
                                         const char* out_path,
                                         char** summary);
/* offers + signals -> dispatch records (JSONL) and ledger CSV.
 * dayahead_path may be NULL, in which case the offers' own baselines are
 * the day-ahead schedule. */
REGCAP_API regcap_status regcap_simulate(const regcap_config* cfg,
                                         const char* offers_path,
                                         const char* dayahead_path,
                                         const char* dispatch_path,
                                         const char* ledger_path,
                                         char** summary);
/* Synthetic campaign of the four strategies plus the eps sweep. Writes
 * benchmark.csv, campaign.csv, ledger.csv and summary.json to output_dir. */
REGCAP_API regcap_status regcap_benchmark(const regcap_config* cfg,
                                          char** summary);
/* ledger CSV -> per (strategy, eps) report CSV */
REGCAP_API regcap_status regcap_report(const char* ledger_path,
                                       const char* out_path, char** summary);

/* ---- closed forms ---- */

REGCAP_API regcap_status regcap_adjusted_epsilon(double eps, double rho,
                                                 double* out);
REGCAP_API regcap_status regcap_gaussian_quantile(double p, double* out);
REGCAP_API regcap_status regcap_kappa_power(double eps, double* out);

#ifdef __cplusplus
}
#endif

#endif /* REGCAP_REGCAP_H_ */
