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


#include "regcap/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "regcap/error.hpp"
#include "regcap/numeric.hpp"

namespace regcap::simulator {

double HourEnvelope::band_lo(double fraction) const {
  const double start = std::isnan(e_minus_start) ? e_minus : e_minus_start;
  return start + (e_minus - start) * fraction;
}

double HourEnvelope::band_hi(double fraction) const {
  const double start = std::isnan(e_plus_start) ? e_plus : e_plus_start;
  return start + (e_plus - start) * fraction;
}

void validate(const HourEnvelope& env) {
  auto bad = [](double v) { return !std::isfinite(v); };
  if (bad(env.p_plus) || bad(env.p_minus) || bad(env.e_minus) ||
      bad(env.e_plus))
    throw_validation("envelope has non-finite values");
  if (env.p_plus < 0.0 || env.p_minus > 0.0)
    throw_validation("envelope needs p_plus >= 0 >= p_minus");
  if (env.e_minus > env.e_plus)
    throw_validation("envelope has e_minus > e_plus");
  if (env.band_lo(0.0) > env.band_hi(0.0))
    throw_validation("envelope start band is empty");
}

namespace {

// inverse of the per-hour energy rate: grid power whose resource energy
// rate equals v (kW)
double grid_for_rate(double v, double eta_c, double eta_d) {
  return v >= 0.0 ? v / eta_c : v * eta_d;
}

}  // namespace

Interval feasible_grid_power(const HourEnvelope& env, double energy,
                             double e_lo, double e_hi, double step_hours,
                             double eta_c, double eta_d) {
  const double a = eta_d * env.p_minus;
  const double b = env.p_plus / eta_c;
  const double el = grid_for_rate((e_lo - energy) / step_hours, eta_c, eta_d);
  const double eh = grid_for_rate((e_hi - energy) / step_hours, eta_c, eta_d);
  if (el > b) return {b, b};
  if (eh < a) return {a, a};
  return {std::max(a, el), std::min(b, eh)};
}

DispatchResult dispatch(const Offer& offer,
                        const signals::SignalTrajectory& traj,
                        const HourEnvelope& env, double e_start, double eta_c,
                        double eta_d, bool record_steps) {
  validate(env);
  if (!(offer.r >= 0.0) || !std::isfinite(offer.r) || !std::isfinite(offer.p))
    throw_validation("dispatch needs a finite offer with r >= 0");
  if (!(eta_c > 0.0 && eta_c <= 1.0 && eta_d > 0.0 && eta_d <= 1.0))
    throw_argument("efficiencies must lie in (0, 1]");
  if (!std::isfinite(e_start)) throw_validation("non-finite start energy");
  const int n = traj.size();
  if (n < 1) throw_validation("empty trajectory");

  DispatchResult res;
  res.regulated = offer.r > 0.0;
  res.e_start = e_start;
  const double tol = 1e-9 * std::max(1.0, std::abs(env.band_hi(0.0)));
  res.start_outside_band =
      e_start < env.band_lo(0.0) - tol || e_start > env.band_hi(0.0) + tol;
  if (record_steps) {
    res.instructed.reserve(n);
    res.achieved.reserve(n);
    res.grid_power.reserve(n);
    res.energy.reserve(n);
  }
  const double dd = 1.0 / n;
  std::vector<double> increments(n);
  std::vector<double> grid(n);
  std::vector<double> discharged(n);
  std::vector<double> achieved(n);
  double e = e_start;
  for (int d = 0; d < n; ++d) {
    const double s = traj.samples[d];
    const double frac = static_cast<double>(d + 1) / n;
    const double target = offer.p - s * offer.r;
    const Interval iv = feasible_grid_power(env, e, env.band_lo(frac),
                                            env.band_hi(frac), dd, eta_c,
                                            eta_d);
    const double y = std::clamp(target, iv.lo, iv.hi);
    if (std::abs(y - target) > 1e-9 * std::max(1.0, std::abs(target)))
      ++res.clamped_steps;
    const double inc = energy_increment(y, dd, eta_c, eta_d);
    e += inc;
    increments[d] = inc;
    grid[d] = y * dd;
    discharged[d] = y < 0.0 ? -y / eta_d * dd : 0.0;
    achieved[d] = res.regulated ? (offer.p - y) / offer.r : 0.0;
    if (record_steps) {
      res.instructed.push_back(s);
      res.achieved.push_back(achieved[d]);
      res.grid_power.push_back(y);
      res.energy.push_back(e);
    }
  }
  res.e_end = e;
  res.energy_increment_sum = pairwise_sum(increments);
  res.grid_energy = pairwise_sum(grid);
  res.discharged_energy = pairwise_sum(discharged);
  if (res.regulated) {
    res.score_raw = performance_score(traj.samples, achieved);
    res.score = clamp_score(res.score_raw);
  }
  return res;
}

double performance_score(std::span<const double> instructed,
                         std::span<const double> achieved) {
  if (instructed.empty() || instructed.size() != achieved.size())
    throw_argument("performance_score needs equal, nonempty sequences");
  std::vector<double> dev(instructed.size());
  std::vector<double> mag(instructed.size());
  for (std::size_t d = 0; d < instructed.size(); ++d) {
    dev[d] = std::abs(instructed[d] - achieved[d]);
    mag[d] = std::abs(instructed[d]);
  }
  const double abs_mean = mean(mag);
  if (abs_mean == 0.0) return 1.0;
  return 1.0 - mean(dev) / abs_mean;
}

std::vector<HourSettlement> settle(std::span<const HourRecord> hours,
                                   double c_d) {
  if (c_d < 0.0) throw_validation("degradation price must be >= 0");
  std::vector<HourSettlement> out;
  out.reserve(hours.size());
  for (std::size_t k = 0; k < hours.size(); ++k) {
    const HourRecord& h = hours[k];
    if (k > 0 && h.hour != hours[k - 1].hour + 1)
      throw_validation("settlement is missing hour " +
                       std::to_string(hours[k - 1].hour + 1));
    HourSettlement s;
    s.hour = h.hour;
    s.r = h.offer.r;
    s.regulated = h.dispatch.regulated;
    s.score = h.dispatch.score;
    s.violated = h.dispatch.clamped_steps > 0;
    s.regulation_revenue = (h.prices.c_rc + h.prices.c_rp * h.mileage) * h.offer.r;
    s.cost_der = h.prices.c_e_rt * std::abs(h.offer.p - h.p_da);
    s.cost_d = c_d * h.dispatch.discharged_energy;
    s.actual_revenue = s.score * s.regulation_revenue - s.cost_der - s.cost_d;
    s.expected_revenue = h.expected.total();
    out.push_back(s);
  }
  return out;
}

DaySummary summarize(std::span<const HourSettlement> hours) {
  DaySummary d;
  std::vector<double> offers;
  std::vector<double> scores;
  std::vector<double> actual;
  std::vector<double> expected;
  for (const HourSettlement& h : hours) {
    offers.push_back(h.r);
    actual.push_back(h.actual_revenue);
    expected.push_back(h.expected_revenue);
    if (h.regulated) {
      scores.push_back(h.score);
      ++d.regulated_hours;
      if (h.violated) ++d.violated_hours;
    }
  }
  d.offer_mwh = pairwise_sum(offers) / 1000.0;
  d.mean_score = scores.empty() ? 1.0 : mean(scores);
  d.actual_revenue = pairwise_sum(actual);
  d.expected_revenue = pairwise_sum(expected);
  return d;
}

}  // namespace regcap::simulator
