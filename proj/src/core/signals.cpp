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


#include "regcap/signals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include "regcap/error.hpp"
#include "regcap/numeric.hpp"

namespace regcap::signals {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

template <typename T>
T parse_field(const std::string& field, long line) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw_validation("line " + std::to_string(line) + ": malformed field '" +
                     field + "'");
  return value;
}

}  // namespace

void validate(const SignalTrajectory& traj, int samples_per_hour) {
  if (traj.size() != samples_per_hour)
    throw_validation("hour " + std::to_string(traj.hour_id) + " has " +
                     std::to_string(traj.size()) + " samples, expected " +
                     std::to_string(samples_per_hour));
  for (double s : traj.samples)
    if (!(s >= -1.0 && s <= 1.0))
      throw_validation("hour " + std::to_string(traj.hour_id) +
                       ": sample outside [-1, 1]");
}

std::vector<SignalTrajectory> parse_trajectories(std::istream& in,
                                                 int samples_per_hour) {
  if (samples_per_hour < 1) throw_argument("samples per hour must be >= 1");
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty()) break;
  }
  if (trim(line) != "hour_id,step,signal")
    throw_validation("signals CSV must start with header hour_id,step,signal");

  std::vector<SignalTrajectory> out;
  SignalTrajectory cur;
  bool open = false;
  auto close_hour = [&]() {
    if (!open) return;
    if (cur.size() != samples_per_hour)
      throw_validation("incomplete hour " + std::to_string(cur.hour_id) +
                       ": " + std::to_string(cur.size()) + " of " +
                       std::to_string(samples_per_hour) + " samples");
    out.push_back(std::move(cur));
    cur = SignalTrajectory{};
    open = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::size_t c1 = t.find(',');
    const std::size_t c2 = c1 == std::string::npos ? c1 : t.find(',', c1 + 1);
    if (c2 == std::string::npos || t.find(',', c2 + 1) != std::string::npos)
      throw_validation("line " + std::to_string(lineno) +
                       ": expected 3 fields");
    const long hour = parse_field<long>(trim(t.substr(0, c1)), lineno);
    const long step = parse_field<long>(trim(t.substr(c1 + 1, c2 - c1 - 1)),
                                        lineno);
    const double s = parse_field<double>(trim(t.substr(c2 + 1)), lineno);
    if (!(s >= -1.0 && s <= 1.0))
      throw_validation("line " + std::to_string(lineno) +
                       ": signal outside [-1, 1]");
    if (open && hour != cur.hour_id) close_hour();
    if (!open) {
      cur.hour_id = hour;
      cur.samples.reserve(samples_per_hour);
      open = true;
    }
    if (step != cur.size() + 1)
      throw_validation("line " + std::to_string(lineno) + ": step " +
                       std::to_string(step) + " out of sequence in hour " +
                       std::to_string(hour));
    if (cur.size() >= samples_per_hour)
      throw_validation("hour " + std::to_string(hour) + " has too many rows");
    cur.samples.push_back(s);
  }
  close_hour();
  return out;
}

std::vector<SignalTrajectory> load_trajectories(const std::string& path,
                                                int samples_per_hour) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open signals file " + path);
  return parse_trajectories(in, samples_per_hour);
}

void write_trajectories(std::ostream& out,
                        std::span<const SignalTrajectory> trajs) {
  out << "hour_id,step,signal\n";
  char buf[64];
  for (const SignalTrajectory& t : trajs) {
    for (int d = 0; d < t.size(); ++d) {
      std::snprintf(buf, sizeof buf, "%ld,%d,%.9g\n", t.hour_id, d + 1,
                    t.samples[d]);
      out << buf;
    }
  }
}

SignalTrajectory rearrange(const SignalTrajectory& traj) {
  SignalTrajectory out = traj;
  std::stable_partition(out.samples.begin(), out.samples.end(),
                        [](double s) { return s >= 0.0; });
  return out;
}

double mileage(const SignalTrajectory& traj) {
  std::vector<double> inc;
  inc.reserve(traj.samples.size());
  for (std::size_t d = 1; d < traj.samples.size(); ++d)
    inc.push_back(std::abs(traj.samples[d] - traj.samples[d - 1]));
  return pairwise_sum(inc);
}

HourlyAggregate aggregate(const SignalTrajectory& traj) {
  HourlyAggregate a;
  const int n = traj.size();
  if (n == 0) return a;
  std::vector<double> up;
  std::vector<double> dn;
  for (double s : traj.samples) (s >= 0.0 ? up : dn).push_back(s);
  a.s_up = mean(up);
  a.s_dn = mean(dn);
  a.dt_up = static_cast<double>(up.size()) / n;
  a.dt_dn = 1.0 - a.dt_up;
  a.mileage = mileage(traj);
  a.s_first = traj.samples.front();
  a.s_mean = mean(traj.samples);
  return a;
}

double unconstrained_energy(const SignalTrajectory& traj, double p_grid_base,
                            double r, double eta_c, double eta_d) {
  if (!(eta_c > 0.0 && eta_c <= 1.0 && eta_d > 0.0 && eta_d <= 1.0))
    throw_argument("efficiencies must lie in (0, 1]");
  const double dd = 1.0 / traj.size();
  std::vector<double> terms(traj.samples.size());
  for (std::size_t d = 0; d < terms.size(); ++d) {
    const double y = p_grid_base - traj.samples[d] * r;
    terms[d] = (eta_c * std::max(y, 0.0) + std::min(y, 0.0) / eta_d) * dd;
  }
  return pairwise_sum(terms);
}

SignalTrajectory two_block(const SignalTrajectory& traj) {
  const HourlyAggregate a = aggregate(traj);
  SignalTrajectory out;
  out.hour_id = traj.hour_id;
  const int n = traj.size();
  const int up = static_cast<int>(std::lround(a.dt_up * n));
  out.samples.assign(n, a.s_dn);
  std::fill(out.samples.begin(), out.samples.begin() + up, a.s_up);
  return out;
}

std::vector<SignalTrajectory> synthetic_signals(
    int hours, int samples_per_hour, std::uint64_t seed,
    const SyntheticSignalConfig& cfg, long first_hour_id) {
  if (hours < 0 || samples_per_hour < 1)
    throw_argument("synthetic_signals: bad dimensions");
  if (!(cfg.ar_coefficient >= 0.0 && cfg.ar_coefficient < 1.0))
    throw_argument("ar_coefficient must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  const double phi = cfg.ar_coefficient;
  const double innovation = cfg.stationary_std * std::sqrt(1.0 - phi * phi);
  double x = cfg.stationary_std * z(rng);
  std::vector<SignalTrajectory> out(hours);
  for (int h = 0; h < hours; ++h) {
    out[h].hour_id = first_hour_id + h;
    out[h].samples.resize(samples_per_hour);
    const double bias = cfg.hourly_bias_std * z(rng);
    for (int d = 0; d < samples_per_hour; ++d) {
      x = phi * x + innovation * z(rng);
      out[h].samples[d] = std::clamp(bias + x, -1.0, 1.0);
    }
  }
  return out;
}

}  // namespace regcap::signals
