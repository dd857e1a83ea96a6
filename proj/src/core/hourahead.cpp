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


#include "regcap/hourahead.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "regcap/error.hpp"

namespace regcap::hourahead {
namespace {

using solver::kInfinity;
using solver::RowEntry;
using solver::RowSense;

double max_value(const Cones& cones, double r, double p,
                 std::array<double, 4>* values = nullptr) {
  double worst = -kInfinity;
  for (int j = 0; j < 4; ++j) {
    const double g = cones[j].value(r, p);
    if (values) (*values)[j] = g;
    worst = std::max(worst, g);
  }
  return worst;
}

double checkpoint_max(const HourAheadProblem& prob, double r, double p) {
  double worst = -kInfinity;
  for (const Cone& c : prob.checkpoint_cones)
    worst = std::max(worst, c.value(r, p));
  return worst;
}

// Every cone of the problem.
double max_value(const HourAheadProblem& prob, double r, double p,
                 std::array<double, 4>* values = nullptr) {
  return std::max(max_value(prob.cones, r, p, values),
                  checkpoint_max(prob, r, p));
}

int most_violated(const std::array<double, 4>& values) {
  return static_cast<int>(std::max_element(values.begin(), values.end()) -
                          values.begin());
}

// Discharged energy of one scenario hour in closed form.
double discharge(const ScenarioHour& h, double r, double p, double eta_d) {
  const double y_up = p - h.s_up * r;
  const double y_dn = p - h.s_dn * r;
  return (h.dt_up * std::max(0.0, -y_up) + h.dt_dn * std::max(0.0, -y_dn)) /
         eta_d;
}

HourAheadSolution assemble(const HourAheadProblem& prob, double r, double p) {
  HourAheadSolution s;
  s.hour = prob.hour;
  s.strategy = prob.strategy;
  s.eps = prob.eps;
  s.eps_prime = prob.eps_prime;
  s.rho = prob.rho;
  s.r = r;
  s.p = p;
  s.dp = std::fabs(p - prob.p_da);
  s.regulation_revenue =
      (prob.prices.c_rc + prob.prices.c_rp * prob.mean_mileage) * r;
  s.deviation_cost = prob.prices.c_e_rt * s.dp;
  for (std::size_t w = 0; w < prob.current_hours.size(); ++w) {
    const double e = discharge(prob.current_hours[w], r, p, prob.eta_d);
    s.expected_discharge.push_back(e);
    s.degradation_cost += prob.scenario_probability[w] * prob.c_d * e;
  }
  s.objective = s.regulation_revenue - s.deviation_cost - s.degradation_cost;
  max_value(prob.cones, r, p, &s.cone_values);
  s.checkpoint_max = checkpoint_max(prob, r, p);
  return s;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 0.5))
    throw_validation("eps must lie in (0, 0.5]");
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::kProposed:
      return "Proposed";
    case Strategy::kRobust:
      return "Robust";
    case Strategy::kDeterm:
      return "Determ";
    case Strategy::kIgnoreEffi:
      return "IgnoreEffi";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  for (Strategy s : {Strategy::kProposed, Strategy::kRobust, Strategy::kDeterm,
                     Strategy::kIgnoreEffi}) {
    std::string a = to_string(s), b = name;
    std::transform(a.begin(), a.end(), a.begin(), ::tolower);
    std::transform(b.begin(), b.end(), b.begin(), ::tolower);
    if (a == b) return s;
  }
  throw_argument("unknown strategy '" + name + "'");
}

double Cone::value(double r, double p) const {
  const double x[3] = {r, p, 1.0};
  double sq = 0.0, lin = 0.0;
  for (int i = 0; i < 3; ++i) {
    sq += gamma[i] * x[i] * x[i];
    lin += dbar[i] * x[i];
  }
  return kappa * std::sqrt(sq) + lin;
}

Vec3 Cone::gradient(double r, double p) const {
  const double x[3] = {r, p, 1.0};
  double sq = 0.0;
  for (int i = 0; i < 3; ++i) sq += gamma[i] * x[i] * x[i];
  const double norm = std::sqrt(sq);
  Vec3 g = dbar;
  if (norm > 0.0)
    for (int i = 0; i < 3; ++i) g[i] += kappa * gamma[i] * x[i] / norm;
  return g;
}

Cones build_cones(const uncertainty::MomentData& moments, double eps,
                  double eps_prime) {
  check_eps(eps);
  Cones cones;
  const double k12 = uncertainty::kappa_power(eps);
  const double k34 = uncertainty::kappa_energy(
      std::max(eps_prime, uncertainty::kEpsilonMin));
  for (int j = 0; j < 4; ++j) {
    for (double v : moments.gamma_diag[j])
      if (!(v >= 0.0)) throw_validation("negative variance in moment data");
    cones[j].kappa = j < 2 ? k12 : k34;
    cones[j].dbar = moments.dbar[j];
    cones[j].gamma = moments.gamma_diag[j];
  }
  return cones;
}

FleetScenarioSet mean_scenario(const FleetScenarioSet& scen) {
  FleetScenarioSet out;
  FleetScenario m;
  m.probability = 1.0;
  m.hours.assign(scen.horizon(), ScenarioHour{});
  for (auto& h : m.hours) h.dt_up = 0.0;
  for (const FleetScenario& sc : scen.scenarios) {
    const double w = sc.probability;
    for (int t = 0; t < scen.horizon(); ++t) {
      const ScenarioHour& a = sc.hours[t];
      ScenarioHour& h = m.hours[t];
      h.s_up += w * a.s_up;
      h.s_dn += w * a.s_dn;
      h.dt_up += w * a.dt_up;
      h.dt_dn += w * a.dt_dn;
      h.mileage += w * a.mileage;
      h.p_plus += w * a.p_plus;
      h.p_minus += w * a.p_minus;
      h.e_minus += w * a.e_minus;
      h.e_plus += w * a.e_plus;
    }
  }
  out.scenarios.push_back(std::move(m));
  return out;
}

HourAheadProblem build_problem(const dayahead::DayAheadSolution& da, int t,
                               const MarketPrices& prices,
                               const FleetScenarioSet& scen,
                               const uncertainty::MomentData& moments,
                               const Cones& cones, double mean_mileage,
                               double e0, double eta_c, double eta_d,
                               const HourAheadOptions& options) {
  const int horizon =
      std::min({da.horizon(), scen.horizon(), prices.horizon()});
  if (t < 0 || t >= horizon) throw_argument("hour outside the horizon");
  if (!(eta_c > 0.0 && eta_c <= 1.0 && eta_d > 0.0 && eta_d <= 1.0))
    throw_validation("efficiencies must lie in (0, 1]");
  if (!std::isfinite(e0)) throw_validation("initial energy must be finite");
  prices.validate();
  scen.validate();

  HourAheadProblem prob;
  prob.hour = t;
  prob.moments = moments;
  prob.cones = cones;
  prob.p_da = da.p_da[t];
  prob.r_da = da.r_da[t];
  prob.prices = prices.hours[t];
  prob.c_d = prices.c_d;
  prob.mean_mileage = mean_mileage;
  prob.eta_c = eta_c;
  prob.eta_d = eta_d;
  prob.options = options;
  for (const FleetScenario& sc : scen.scenarios) {
    prob.scenario_probability.push_back(sc.probability);
    prob.current_hours.push_back(sc.hours[t]);
  }

  double reach = std::fabs(prob.p_da) + 1.0;
  for (const ScenarioHour& h : prob.current_hours)
    reach = std::max(reach, 2.0 * (h.p_plus / eta_c - h.p_minus) +
                                std::fabs(prob.p_da) + 1.0);
  if (moments.sign_da >= 0) {
    prob.p_lo = 0.0;
    prob.p_hi = reach;
  } else {
    prob.p_lo = -reach;
    prob.p_hi = 0.0;
  }

  solver::LinearProgram& lp = prob.master;
  lp.sense = solver::Sense::kMaximize;
  prob.col_r = lp.add_column(
      0.0, std::max(0.0, prob.r_da),
      prob.prices.c_rc + prob.prices.c_rp * mean_mileage -
          dayahead::kTieBreakWeight,
      "r");
  prob.col_p = lp.add_column(prob.p_lo, prob.p_hi, 0.0, "p");
  prob.col_dp = lp.add_column(0.0, kInfinity, -prob.prices.c_e_rt, "dp");
  {
    const RowEntry up[] = {{prob.col_dp, 1.0}, {prob.col_p, -1.0}};
    lp.add_row(up, RowSense::kGreaterEqual, -prob.p_da, "dp_up");
    const RowEntry dn[] = {{prob.col_dp, 1.0}, {prob.col_p, 1.0}};
    lp.add_row(dn, RowSense::kGreaterEqual, prob.p_da, "dp_dn");
  }

  // cones without a norm term are plain rows of the master
  for (int j = 0; j < 4; ++j) {
    const Cone& c = cones[j];
    if (c.kappa != 0.0 && (c.gamma[0] != 0.0 || c.gamma[1] != 0.0 ||
                           c.gamma[2] != 0.0))
      continue;
    const RowEntry row[] = {{prob.col_r, c.dbar[0]}, {prob.col_p, c.dbar[1]}};
    lp.add_row(row, RowSense::kLessEqual, -c.dbar[2],
               "cone" + std::to_string(j + 1));
  }

  // degradation of hour t under every scenario
  dayahead::BlockSpec now;
  now.t_begin = t;
  now.t_end = t + 1;
  now.p_cols = {prob.col_p};
  now.r_cols.assign(scen.size(), std::vector<int>{prob.col_r});
  now.eta_c = eta_c;
  now.eta_d = eta_d;
  now.c_d = prices.c_d;
  now.initial_energy = e0;
  now.binary_modes = false;
  now.free_first_hour = true;
  const auto cells = dayahead::add_scenario_block(lp, scen, now, nullptr);
  for (const auto& row : cells) prob.current.push_back(row[0]);

  if (options.future_block && t + 1 < horizon) {
    const FleetScenarioSet fs =
        options.future_all_scenarios ? scen : mean_scenario(scen);
    dayahead::BlockSpec fut;
    fut.t_begin = t;
    fut.t_end = horizon;
    fut.p_cols.push_back(prob.col_p);
    for (int tau = t + 1; tau < horizon; ++tau)
      fut.p_cols.push_back(lp.add_column(-kInfinity, kInfinity,
                                         -prices.hours[tau].c_e_da,
                                         "pf_" + std::to_string(tau)));
    fut.r_cols.resize(fs.size());
    for (int w = 0; w < fs.size(); ++w) {
      const FleetScenario& sc = fs.scenarios[w];
      fut.r_cols[w].push_back(prob.col_r);
      for (int tau = t + 1; tau < horizon; ++tau) {
        const HourPrices& hp = prices.hours[tau];
        fut.r_cols[w].push_back(lp.add_column(
            0.0, std::max(0.0, da.r_da[tau]),
            sc.probability * (hp.c_rc + hp.c_rp * sc.hours[tau].mileage) -
                dayahead::kTieBreakWeight));
      }
    }
    fut.eta_c = eta_c;
    fut.eta_d = eta_d;
    fut.c_d = prices.c_d;
    fut.initial_energy = e0;
    fut.binary_modes = false;
    fut.free_first_hour = true;
    fut.first_hour_degradation = false;
    fut.soft_energy = true;
    fut.energy_penalty = options.future_energy_penalty;
    dayahead::add_scenario_block(lp, fs, fut, nullptr);
  }
  max_value(cones, 0.0, prob.p_da, &prob.at_schedule);
  return prob;
}

namespace {

void add_checkpoints(HourAheadProblem& prob, const FleetScenarioSet& scen,
                     int t, const uncertainty::SignalStatistics& stats,
                     const uncertainty::HourForecast& fc, double eta_c,
                     double eta_d) {
  const int k = prob.options.energy_checkpoints;
  if (k <= 0) return;
  double lo_start = 0.0, hi_start = 0.0;
  if (t > 0)
    for (const FleetScenario& sc : scen.scenarios) {
      lo_start += sc.probability * sc.hours[t - 1].e_minus;
      hi_start += sc.probability * sc.hours[t - 1].e_plus;
    }
  const double a = (1.0 + eta_c * eta_d) / (2.0 * eta_d);
  const bool sq = prob.options.squared_scaling;
  const double k_lo = sq ? a * a : a;
  const double k_hi = sq ? eta_c * eta_c : eta_c;
  const uncertainty::MomentData& m = prob.moments;
  for (int i = 1; i <= k; ++i) {
    const double f = static_cast<double>(i) / (k + 1);
    Cone lo = prob.cones[2];
    lo.dbar = {f * m.dbar[2][0], f * m.dbar[2][1],
               -fc.mean_e0 + lo_start + f * (fc.mean_e_minus - lo_start)};
    lo.gamma = {f * f * k_lo * stats.var_s1, 0.0, fc.var_e0 + fc.var_e_minus};
    Cone hi = prob.cones[3];
    hi.dbar = {f * m.dbar[3][0], f * m.dbar[3][1],
               fc.mean_e0 - hi_start - f * (fc.mean_e_plus - hi_start)};
    hi.gamma = {f * f * k_hi * stats.var_s1, 0.0, fc.var_e0 + fc.var_e_plus};
    prob.checkpoint_cones.push_back(lo);
    prob.checkpoint_cones.push_back(hi);
  }
}

}  // namespace

HourAheadProblem build_hourahead(const dayahead::DayAheadSolution& da, int t,
                                 const MarketPrices& prices,
                                 const FleetScenarioSet& scen,
                                 const uncertainty::SignalStatistics& stats,
                                 const uncertainty::HourForecast& fc,
                                 double eps, double eta_c, double eta_d,
                                 const HourAheadOptions& options) {
  check_eps(eps);
  if (t < 0 || t >= da.horizon()) throw_argument("hour outside the horizon");
  const double eps_prime = uncertainty::adjusted_epsilon(eps, stats.rho);
  const int sign = da.p_da[t] >= 0.0 ? 1 : -1;
  const uncertainty::MomentData m =
      uncertainty::assemble_moments(stats, fc, sign, eta_c, eta_d,
                                    options.squared_scaling);
  HourAheadProblem prob =
      build_problem(da, t, prices, scen, m, build_cones(m, eps, eps_prime),
                    stats.mean_mileage, fc.mean_e0, eta_c, eta_d, options);
  prob.eps = eps;
  prob.eps_prime = eps_prime;
  prob.rho = stats.rho;
  add_checkpoints(prob, scen, t, stats, fc, eta_c, eta_d);
  return prob;
}

HourAheadSolution zero_offer(const HourAheadProblem& prob) {
  // max of convex functions of P is convex: golden-section search
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = prob.p_lo, b = prob.p_hi;
  auto f = [&](double p) { return max_value(prob, 0.0, p); };
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < 200 && b - a > 1e-9 * std::max(1.0, std::fabs(b)); ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  double p = 0.5 * (a + b);
  // prefer the schedule when it is already feasible
  if (f(prob.p_da) <= prob.options.tolerance &&
      prob.p_da >= prob.p_lo && prob.p_da <= prob.p_hi)
    p = prob.p_da;
  HourAheadSolution s = assemble(prob, 0.0, p);
  s.infeasible = max_value(prob, 0.0, p) > prob.options.tolerance;
  return s;
}

HourAheadSolution solve_hourahead(const HourAheadProblem& prob) {
  solver::SimplexSolver lp(prob.master);
  const double tol = prob.options.tolerance;
  auto fail = [&](const std::array<double, 4>& values, const char* where) {
    const int j = most_violated(values);
    std::ostringstream os;
    os << "hour-ahead problem infeasible at hour " << prob.hour
       << "; most violated cone j=" << j + 1 << " (" << values[j] << " at "
       << where << ")";
    throw Error(ErrorKind::kSolver, os.str());
  };
  solver::LpResult res = lp.solve();
  if (res.status == solver::LpStatus::kInfeasible)
    fail(prob.at_schedule, "R=0, P=P_da");
  if (res.status != solver::LpStatus::kOptimal)
    throw Error(ErrorKind::kSolver,
                std::string("hour-ahead master: ") + to_string(res.status));

  int rounds = 1;
  bool converged = false;
  double r = 0.0, p = 0.0;
  std::array<double, 4> values{};
  for (;;) {
    r = std::clamp(res.x[prob.col_r], 0.0, std::max(0.0, prob.r_da));
    p = std::clamp(res.x[prob.col_p], prob.p_lo, prob.p_hi);
    if (max_value(prob, r, p, &values) <= tol) {
      converged = true;
      break;
    }
    if (rounds >= prob.options.max_rounds) break;
    auto cut_at = [&](const Cone& c) {
      if (c.value(r, p) <= tol) return;
      const Vec3 g = c.gradient(r, p);
      const double scale = std::max({std::fabs(g[0]), std::fabs(g[1]), 1e-12});
      const RowEntry cut[] = {{prob.col_r, g[0] / scale},
                              {prob.col_p, g[1] / scale}};
      lp.add_cut(cut, -g[2] / scale);
    };
    for (const Cone& c : prob.cones) cut_at(c);
    for (const Cone& c : prob.checkpoint_cones) cut_at(c);
    res = lp.solve();
    ++rounds;
    if (res.status == solver::LpStatus::kInfeasible) fail(values, "last iterate");
    if (res.status != solver::LpStatus::kOptimal)
      throw Error(ErrorKind::kSolver,
                  std::string("hour-ahead master: ") + to_string(res.status));
  }

  bool shrunk = false;
  if (!converged) {
    // largest feasible fraction of R with P held
    if (max_value(prob, 0.0, p) > tol) {
      HourAheadSolution s = zero_offer(prob);
      s.rounds = rounds;
      s.shrunk = true;
      return s;
    }
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (max_value(prob, mid * r, p) <= tol ? lo : hi) = mid;
    }
    r *= lo;
    shrunk = true;
  }
  HourAheadSolution s = assemble(prob, r, p);
  s.rounds = rounds;
  s.converged = converged;
  s.shrunk = shrunk;
  if (converged) {
    double now = s.regulation_revenue - s.deviation_cost;
    for (std::size_t w = 0; w < prob.current.size(); ++w) {
      const dayahead::CellColumns& c = prob.current[w];
      const ScenarioHour& h = prob.current_hours[w];
      now += prob.scenario_probability[w] * prob.c_d *
             (h.dt_up * res.x[c.pd_up] + h.dt_dn * res.x[c.pd_dn]);
    }
    s.future_value = res.objective - now + dayahead::kTieBreakWeight * r;
  }
  return s;
}

HourAheadSolution proposed_offer(const dayahead::DayAheadSolution& da, int t,
                                 const MarketPrices& prices,
                                 const FleetScenarioSet& scen,
                                 const uncertainty::SignalStatistics& stats,
                                 const uncertainty::HourForecast& fc,
                                 double eps, double eta_c, double eta_d,
                                 const HourAheadOptions& options) {
  return solve_hourahead(build_hourahead(da, t, prices, scen, stats, fc, eps,
                                         eta_c, eta_d, options));
}

uncertainty::MomentData worst_case_moments(
    const uncertainty::SignalStatistics& stats,
    const uncertainty::HourForecast& fc, int sign_da, double eta_c,
    double eta_d) {
  const double a = (1.0 + eta_c * eta_d) / (2.0 * eta_d);
  const double b = (1.0 - eta_c * eta_d) / (2.0 * eta_d);
  const double p_plus =
      std::max(0.0, fc.mean_p_plus - 3.0 * std::sqrt(fc.var_p_plus));
  const double p_minus =
      std::min(0.0, fc.mean_p_minus + 3.0 * std::sqrt(fc.var_p_minus));
  const double e_minus = fc.mean_e_minus + 3.0 * std::sqrt(fc.var_e_minus);
  const double e_plus = fc.mean_e_plus - 3.0 * std::sqrt(fc.var_e_plus);
  const double e0_lo = std::min(fc.min_e0, fc.mean_e0);
  const double e0_hi = std::max(fc.max_e0, fc.mean_e0);
  uncertainty::MomentData m;
  m.sign_da = sign_da < 0 ? -1 : 1;
  // s1 = -1 drives charging power up, s1 = +1 drives discharging power down
  m.dbar[0] = {eta_c, eta_c, -p_plus};
  m.dbar[1] = {1.0 / eta_d, -1.0 / eta_d, p_minus};
  m.dbar[2] = {a * stats.max_sH + b, m.sign_da > 0 ? -eta_c : -1.0 / eta_d,
               -e0_lo + e_minus};
  m.dbar[3] = {-eta_c * stats.min_sH, eta_c, e0_hi - e_plus};
  return m;
}

HourAheadProblem build_strategy(Strategy strategy,
                                const dayahead::DayAheadSolution& da, int t,
                                const MarketPrices& prices,
                                const FleetScenarioSet& scen,
                                const uncertainty::SignalStatistics& stats,
                                const uncertainty::HourForecast& fc,
                                double eps, double eta_c, double eta_d,
                                const HourAheadOptions& options) {
  if (t < 0 || t >= da.horizon()) throw_argument("hour outside the horizon");
  const int sign = da.p_da[t] >= 0.0 ? 1 : -1;
  HourAheadProblem prob;
  switch (strategy) {
    case Strategy::kProposed:
      prob = build_hourahead(da, t, prices, scen, stats, fc, eps, eta_c,
                             eta_d, options);
      break;
    case Strategy::kIgnoreEffi:
      prob = build_hourahead(da, t, prices, scen, stats, fc, eps, 1.0, 1.0,
                             options);
      break;
    case Strategy::kRobust:
    case Strategy::kDeterm: {
      uncertainty::MomentData m =
          strategy == Strategy::kRobust
              ? worst_case_moments(stats, fc, sign, eta_c, eta_d)
              : uncertainty::assemble_moments(stats, fc, sign, eta_c,
                                              eta_d, options.squared_scaling);
      for (Vec3& g : m.gamma_diag) g = {0.0, 0.0, 0.0};
      Cones cones;
      for (int j = 0; j < 4; ++j) cones[j].dbar = m.dbar[j];
      prob = build_problem(da, t, prices, scen, m, cones, stats.mean_mileage,
                           fc.mean_e0, eta_c, eta_d, options);
      break;
    }
  }
  prob.strategy = strategy;
  return prob;
}

HourAheadSolution solve_or_zero(const HourAheadProblem& prob) {
  try {
    return solve_hourahead(prob);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kSolver) throw;
    return zero_offer(prob);
  }
}

HourAheadSolution robust_offer(const dayahead::DayAheadSolution& da, int t,
                               const MarketPrices& prices,
                               const FleetScenarioSet& scen,
                               const uncertainty::SignalStatistics& stats,
                               const uncertainty::HourForecast& fc,
                               double eta_c, double eta_d,
                               const HourAheadOptions& options) {
  return solve_or_zero(build_strategy(Strategy::kRobust, da, t, prices, scen,
                                      stats, fc, 0.5, eta_c, eta_d, options));
}

HourAheadSolution deterministic_offer(
    const dayahead::DayAheadSolution& da, int t, const MarketPrices& prices,
    const FleetScenarioSet& scen, const uncertainty::SignalStatistics& stats,
    const uncertainty::HourForecast& fc, double eta_c, double eta_d,
    const HourAheadOptions& options) {
  return solve_hourahead(build_strategy(Strategy::kDeterm, da, t, prices,
                                        scen, stats, fc, 0.5, eta_c, eta_d,
                                        options));
}

HourAheadSolution ignore_efficiency_offer(
    const dayahead::DayAheadSolution& da, int t, const MarketPrices& prices,
    const FleetScenarioSet& scen, const uncertainty::SignalStatistics& stats,
    const uncertainty::HourForecast& fc, double eps,
    const HourAheadOptions& options) {
  return solve_hourahead(build_strategy(Strategy::kIgnoreEffi, da, t, prices,
                                        scen, stats, fc, eps, 1.0, 1.0,
                                        options));
}

HourAheadSolution offer(Strategy strategy,
                        const dayahead::DayAheadSolution& da, int t,
                        const MarketPrices& prices,
                        const FleetScenarioSet& scen,
                        const uncertainty::SignalStatistics& stats,
                        const uncertainty::HourForecast& fc, double eps,
                        double eta_c, double eta_d,
                        const HourAheadOptions& options) {
  return solve_or_zero(build_strategy(strategy, da, t, prices, scen, stats,
                                      fc, eps, eta_c, eta_d, options));
}

}  // namespace regcap::hourahead
