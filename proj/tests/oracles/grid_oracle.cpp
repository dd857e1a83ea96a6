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


#include "oracles/grid_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace regcap::oracle {
namespace {

double worst_cone(const hourahead::HourAheadProblem& prob, double r,
                  double p) {
  double worst = -1e300;
  for (const hourahead::Cone& c : prob.cones) {
    const double x[3] = {r, p, 1.0};
    double q = 0.0, l = 0.0;
    for (int i = 0; i < 3; ++i) {
      q += c.gamma[i] * x[i] * x[i];
      l += c.dbar[i] * x[i];
    }
    worst = std::max(worst, c.kappa * std::sqrt(q) + l);
  }
  return worst;
}

double objective(const hourahead::HourAheadProblem& prob, double r,
                 double p) {
  double f = (prob.prices.c_rc + prob.prices.c_rp * prob.mean_mileage) * r -
             prob.prices.c_e_rt * std::fabs(p - prob.p_da);
  for (std::size_t w = 0; w < prob.current_hours.size(); ++w) {
    const ScenarioHour& h = prob.current_hours[w];
    double ed = 0.0;
    for (auto [s, dt] : {std::pair{h.s_up, h.dt_up}, {h.s_dn, h.dt_dn}}) {
      const double y = p - s * r;
      if (y < 0.0) ed += dt * -y / prob.eta_d;
    }
    f -= prob.scenario_probability[w] * prob.c_d * ed;
  }
  return f;
}

// Minimizer over P of the worst cone at fixed R (convex in P).
double best_p(const hourahead::HourAheadProblem& prob, double r) {
  double a = prob.p_lo, b = prob.p_hi;
  for (int i = 0; i < 200; ++i) {
    const double c = a + (b - a) / 3.0, d = b - (b - a) / 3.0;
    if (worst_cone(prob, r, c) <= worst_cone(prob, r, d))
      b = d;
    else
      a = c;
  }
  return 0.5 * (a + b);
}

bool any_feasible(const hourahead::HourAheadProblem& prob, double r) {
  return worst_cone(prob, r, best_p(prob, r)) <= 0.0;
}

// Boundary of the convex feasible set along P from a feasible inside point.
double edge(const hourahead::HourAheadProblem& prob, double r, double inside,
            double outside) {
  if (worst_cone(prob, r, outside) <= 0.0) return outside;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (inside + outside);
    (worst_cone(prob, r, mid) <= 0.0 ? inside : outside) = mid;
  }
  return inside;
}

}  // namespace

GridResult grid_search(const hourahead::HourAheadProblem& prob, int n) {
  GridResult best;
  const double r_top = std::max(0.0, prob.r_da);
  if (!any_feasible(prob, 0.0)) return best;
  double r_hi = r_top;
  if (!any_feasible(prob, r_top)) {
    double lo = 0.0, hi = r_top;
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo + hi);
      (any_feasible(prob, mid) ? lo : hi) = mid;
    }
    r_hi = lo;
  }
  for (int i = 0; i < n; ++i) {
    const double r = n == 1 ? r_hi : r_hi * i / (n - 1);
    const double mid = best_p(prob, r);
    if (worst_cone(prob, r, mid) > 0.0) continue;
    const double lo = edge(prob, r, mid, prob.p_lo);
    const double hi = edge(prob, r, mid, prob.p_hi);
    for (int k = 0; k < n; ++k) {
      const double p = n == 1 ? mid : lo + (hi - lo) * k / (n - 1);
      const double f = objective(prob, r, p);
      if (!best.feasible || f > best.objective) {
        best = {true, f, r, p};
      }
    }
    // the schedule itself, where the deviation cost has its kink
    if (prob.p_da >= lo && prob.p_da <= hi) {
      const double f = objective(prob, r, prob.p_da);
      if (f > best.objective) best = {true, f, r, prob.p_da};
    }
  }
  return best;
}

}  // namespace regcap::oracle
