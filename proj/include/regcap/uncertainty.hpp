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


#ifndef REGCAP_UNCERTAINTY_HPP_
#define REGCAP_UNCERTAINTY_HPP_

// Distribution statistics of signals and fleet parameters, the
// chi-square ambiguity radius, the adjusted tolerance, Gaussian quantiles
// and the per-constraint moment data of the four chance constraints.

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "regcap/scenario.hpp"
#include "regcap/signals.hpp"
#include "regcap/simulator.hpp"

namespace regcap::uncertainty {

inline constexpr double kEpsilonMin = 1e-6;
inline constexpr int kDefaultBins = 50;

struct SignalStatistics {
  double mean_s1 = 0.0;  // 2-second signal
  double var_s1 = 0.0;
  double mean_sH = 0.0;  // hourly average
  double var_sH = 0.0;
  double rho = 0.0;      // chi-square radius of the hourly-average fit
  double mean_mileage = 0.0;
  // empirical extremes of the hourly average, used by the robust strategy
  double min_sH = 0.0;
  double max_sH = 0.0;
  long sample_count = 0;  // hours
  int bins = kDefaultBins;
};

struct HourForecast {
  double mean_p_plus = 0.0, var_p_plus = 0.0;
  double mean_p_minus = 0.0, var_p_minus = 0.0;
  double mean_e_plus = 0.0, var_e_plus = 0.0;
  double mean_e_minus = 0.0, var_e_minus = 0.0;
  double mean_e0 = 0.0, var_e0 = 0.0;
  // extremes of e0 over the simulated ensemble (robust strategy)
  double min_e0 = 0.0, max_e0 = 0.0;
};

using CapacityForecast = std::vector<HourForecast>;

// Coefficients are over X = [R, P_gr_ha, 1].
using Vec3 = std::array<double, 3>;

struct MomentData {
  std::array<Vec3, 4> dbar{};
  std::array<Vec3, 4> gamma_diag{};
  int sign_da = 1;  // +1 when P_gr_da >= 0, -1 otherwise
};

// Sample statistics over an archive of hours. Throws Error(kValidation) for
// fewer than two hours, bins < 5, or zero variance of the hourly means.
SignalStatistics fit_signal_stats(
    std::span<const signals::SignalTrajectory> trajs, int bins = kDefaultBins);

// Histogram of values over `bins` equal-probability bins of
// Gaussian(mean, var); tail bins are half-open.
std::vector<double> equiprobable_histogram(std::span<const double> values,
                                           double mean, double var, int bins);

double chi2_divergence(std::span<const double> p, std::span<const double> q);

double adjusted_epsilon(double eps, double rho);
inline bool is_saturated(double eps_prime) {
  return eps_prime <= kEpsilonMin;
}

// Standard normal quantile, absolute error below 1e-9.
double gaussian_quantile(double p);

inline double kappa_power(double eps) { return std::sqrt((1.0 - eps) / eps); }
inline double kappa_energy(double eps_prime) {
  return gaussian_quantile(1.0 - eps_prime);
}

struct E0Estimate {
  double mean = 0.0;
  double var = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::vector<double> terminal;
};

// Distribution of the cumulative energy at the start of hour t obtained by
// replaying hour t-1 under every historical trajectory, starting from
// e_prior.
E0Estimate estimate_e0(const simulator::Offer& prev_offer,
                       std::span<const signals::SignalTrajectory> trajs,
                       const simulator::HourEnvelope& fleet, double e_prior,
                       double eta_c, double eta_d);

// squared_scaling selects eta^2 and ((1+eta_c eta_d)/(2 eta_d))^2 factors
// on the signal variances instead of the linear ones.
MomentData assemble_moments(const SignalStatistics& stats,
                            const HourForecast& fc, int sign_da, double eta_c,
                            double eta_d, bool squared_scaling = false);

// Capacity forecast for one hour from a scenario set: means across
// scenarios; variances (relative_std * mean)^2.
HourForecast forecast_from_scenarios(const FleetScenarioSet& scen, int hour,
                                     double relative_std);

}  // namespace regcap::uncertainty

#endif  // REGCAP_UNCERTAINTY_HPP_
