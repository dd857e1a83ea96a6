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


#include "regcap/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "regcap/error.hpp"
#include "regcap/numeric.hpp"

namespace regcap::uncertainty {

SignalStatistics fit_signal_stats(
    std::span<const signals::SignalTrajectory> trajs, int bins) {
  if (trajs.size() < 2)
    throw_validation("signal statistics need at least 2 hours");
  if (bins < 5) throw_validation("rho estimation needs at least 5 bins");
  std::vector<double> pooled;
  std::vector<double> hourly;
  std::vector<double> miles;
  for (const auto& t : trajs) {
    if (t.size() < 1) throw_validation("empty trajectory in archive");
    pooled.insert(pooled.end(), t.samples.begin(), t.samples.end());
    hourly.push_back(mean(t.samples));
    miles.push_back(signals::mileage(t));
  }
  SignalStatistics st;
  st.sample_count = static_cast<long>(trajs.size());
  st.bins = bins;
  st.mean_s1 = mean(pooled);
  st.var_s1 = sample_variance(pooled);
  st.mean_sH = mean(hourly);
  st.var_sH = sample_variance(hourly);
  st.mean_mileage = mean(miles);
  st.min_sH = *std::min_element(hourly.begin(), hourly.end());
  st.max_sH = *std::max_element(hourly.begin(), hourly.end());
  if (!(st.var_sH > 0.0))
    throw_validation(
        "hourly means have zero variance; the Gaussian reference is "
        "degenerate and rho is undefined");
  const std::vector<double> p =
      equiprobable_histogram(hourly, st.mean_sH, st.var_sH, bins);
  const std::vector<double> q(bins, 1.0 / bins);
  st.rho = chi2_divergence(p, q);
  return st;
}

std::vector<double> equiprobable_histogram(std::span<const double> values,
                                           double mu, double var, int bins) {
  if (bins < 1 || !(var > 0.0) || values.empty())
    throw_argument("equiprobable_histogram: bad arguments");
  const double sd = std::sqrt(var);
  std::vector<double> edges(bins - 1);
  for (int k = 1; k < bins; ++k)
    edges[k - 1] = mu + sd * gaussian_quantile(static_cast<double>(k) / bins);
  std::vector<double> counts(bins, 0.0);
  for (double v : values) {
    // bin k holds edges[k-1] <= v < edges[k]
    const auto it = std::upper_bound(edges.begin(), edges.end(), v);
    counts[it - edges.begin()] += 1.0;
  }
  for (double& c : counts) c /= static_cast<double>(values.size());
  return counts;
}

double chi2_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty())
    throw_validation("chi2_divergence: length mismatch");
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0) || !(q[i] > 0.0))
      throw_validation("chi2_divergence: needs p >= 0 and q > 0");
    sp += p[i];
    sq += q[i];
  }
  if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9)
    throw_validation("chi2_divergence: inputs must sum to 1");
  std::vector<double> terms(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    terms[i] = (p[i] - q[i]) * (p[i] - q[i]) / q[i];
  return pairwise_sum(terms);
}

double adjusted_epsilon(double eps, double rho) {
  if (!(eps > 0.0 && eps <= 0.5))
    throw_argument("eps must lie in (0, 0.5]");
  if (!(rho >= 0.0) || !std::isfinite(rho))
    throw_argument("rho must be finite and >= 0");
  if (rho == 0.0) return eps;
  const double root = std::sqrt(rho * rho + 4.0 * rho * (eps - eps * eps));
  const double shift = (root - (1.0 - 2.0 * eps) * rho) / (2.0 * rho + 2.0);
  return std::clamp(eps - shift, kEpsilonMin, eps);
}

double gaussian_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw_argument("quantile needs p in (0, 1)");
  if (p > 0.5) return -gaussian_quantile(1.0 - p);
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  double x;
  if (p < 0.02425) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  // one Newton step on the CDF
  x -= (normal_cdf(x) - p) / normal_pdf(x);
  return x;
}

E0Estimate estimate_e0(const simulator::Offer& prev_offer,
                       std::span<const signals::SignalTrajectory> trajs,
                       const simulator::HourEnvelope& fleet, double e_prior,
                       double eta_c, double eta_d) {
  if (trajs.empty()) throw_validation("estimate_e0 needs trajectories");
  E0Estimate est;
  est.terminal.reserve(trajs.size());
  for (const auto& t : trajs) {
    const simulator::DispatchResult r =
        simulator::dispatch(prev_offer, t, fleet, e_prior, eta_c, eta_d);
    est.terminal.push_back(r.e_end);
  }
  est.mean = mean(est.terminal);
  est.var = sample_variance(est.terminal);
  est.min = *std::min_element(est.terminal.begin(), est.terminal.end());
  est.max = *std::max_element(est.terminal.begin(), est.terminal.end());
  return est;
}

MomentData assemble_moments(const SignalStatistics& stats,
                            const HourForecast& fc, int sign_da, double eta_c,
                            double eta_d, bool squared_scaling) {
  if (!(eta_c > 0.0 && eta_c <= 1.0 && eta_d > 0.0 && eta_d <= 1.0))
    throw_argument("efficiencies must lie in (0, 1]");
  const double a = (1.0 + eta_c * eta_d) / (2.0 * eta_d);
  const double b = (1.0 - eta_c * eta_d) / (2.0 * eta_d);
  const double k1 = squared_scaling ? eta_c * eta_c : eta_c;
  const double k2 = squared_scaling ? 1.0 / (eta_d * eta_d) : 1.0 / eta_d;
  const double k3 = squared_scaling ? a * a : a;
  MomentData m;
  m.sign_da = sign_da < 0 ? -1 : 1;
  m.dbar[0] = {-eta_c * stats.mean_s1, eta_c, -fc.mean_p_plus};
  m.dbar[1] = {stats.mean_s1 / eta_d, -1.0 / eta_d, fc.mean_p_minus};
  m.dbar[2] = {a * stats.mean_sH + b, m.sign_da > 0 ? -eta_c : -1.0 / eta_d,
               -fc.mean_e0 + fc.mean_e_minus};
  m.dbar[3] = {-eta_c * stats.mean_sH, eta_c, fc.mean_e0 - fc.mean_e_plus};
  m.gamma_diag[0] = {k1 * stats.var_s1, 0.0, fc.var_p_plus};
  m.gamma_diag[1] = {k2 * stats.var_s1, 0.0, fc.var_p_minus};
  m.gamma_diag[2] = {k3 * stats.var_sH, 0.0, fc.var_e0 + fc.var_e_minus};
  m.gamma_diag[3] = {k1 * stats.var_sH, 0.0, fc.var_e0 + fc.var_e_plus};
  for (const Vec3& g : m.gamma_diag)
    for (double v : g)
      if (!(v >= 0.0)) throw_validation("negative variance in moment data");
  return m;
}

HourForecast forecast_from_scenarios(const FleetScenarioSet& scen, int hour,
                                     double relative_std) {
  if (hour < 0 || hour >= scen.horizon())
    throw_argument("forecast hour outside the scenario horizon");
  HourForecast fc;
  for (const FleetScenario& s : scen.scenarios) {
    const ScenarioHour& h = s.hours[hour];
    fc.mean_p_plus += s.probability * h.p_plus;
    fc.mean_p_minus += s.probability * h.p_minus;
    fc.mean_e_plus += s.probability * h.e_plus;
    fc.mean_e_minus += s.probability * h.e_minus;
  }
  auto v = [&](double m) { return (relative_std * m) * (relative_std * m); };
  fc.var_p_plus = v(fc.mean_p_plus);
  fc.var_p_minus = v(fc.mean_p_minus);
  fc.var_e_plus = v(fc.mean_e_plus);
  fc.var_e_minus = v(fc.mean_e_minus);
  return fc;
}

}  // namespace regcap::uncertainty
