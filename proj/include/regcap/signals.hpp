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


#ifndef REGCAP_SIGNALS_HPP_
#define REGCAP_SIGNALS_HPP_

// Regulation-signal trajectories: one hour of dispatch ratios in [-1, 1]
// sampled every 2 seconds (n = 1800 per hour by default).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace regcap::signals {

inline constexpr int kDefaultSamplesPerHour = 1800;

struct SignalTrajectory {
  long hour_id = 0;
  std::vector<double> samples;

  int size() const { return static_cast<int>(samples.size()); }
};

struct HourlyAggregate {
  double s_up = 0.0;    // mean of samples >= 0
  double s_dn = 0.0;    // mean of samples < 0
  double dt_up = 0.0;   // hours
  double dt_dn = 0.0;   // hours
  double mileage = 0.0;
  double s_first = 0.0;
  double s_mean = 0.0;
};

// Throws Error(kValidation) on wrong length or samples outside [-1, 1].
void validate(const SignalTrajectory& traj, int samples_per_hour);

// Signals CSV: header "hour_id,step,signal", step 1-based and contiguous.
std::vector<SignalTrajectory> parse_trajectories(
    std::istream& in, int samples_per_hour = kDefaultSamplesPerHour);
std::vector<SignalTrajectory> load_trajectories(
    const std::string& path, int samples_per_hour = kDefaultSamplesPerHour);
void write_trajectories(std::ostream& out,
                        std::span<const SignalTrajectory> trajs);

// Stable partition: nonnegative samples first, then negative ones.
SignalTrajectory rearrange(const SignalTrajectory& traj);

HourlyAggregate aggregate(const SignalTrajectory& traj);

// Sum of absolute increments, not normalized.
double mileage(const SignalTrajectory& traj);

// Resource-side energy (kWh) of following the signal around p_grid_base
// with capacity r when no power or energy limit binds.
double unconstrained_energy(const SignalTrajectory& traj, double p_grid_base,
                            double r, double eta_c, double eta_d);

// Two-block signal s'' built from the aggregate: s_up for the first d*
// samples and s_dn for the rest.
SignalTrajectory two_block(const SignalTrajectory& traj);

// Synthetic RegA-like archive. Each hour is an AR(1) path around an hourly
// bias, clipped to [-1, 1]; the AR state carries over between hours.
struct SyntheticSignalConfig {
  double ar_coefficient = 0.99;
  double stationary_std = 0.45;
  double hourly_bias_std = 0.05;
};

std::vector<SignalTrajectory> synthetic_signals(
    int hours, int samples_per_hour, std::uint64_t seed,
    const SyntheticSignalConfig& cfg = {}, long first_hour_id = 0);

}  // namespace regcap::signals

#endif  // REGCAP_SIGNALS_HPP_
