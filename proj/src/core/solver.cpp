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


#include "regcap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>

#include "regcap/error.hpp"

namespace regcap::solver {

namespace {

bool is_finite(double v) { return std::isfinite(v); }

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string column_label(const LinearProgram& lp, int j) {
  if (static_cast<int>(lp.column_names.size()) == lp.num_columns() &&
      !lp.column_names[j].empty())
    return lp.column_names[j];
  return "x" + std::to_string(j);
}

std::string row_label(const LinearProgram& lp, int i) {
  if (static_cast<int>(lp.row_names.size()) == lp.num_rows() &&
      !lp.row_names[i].empty())
    return lp.row_names[i];
  return "r" + std::to_string(i);
}

void append_term(std::ostringstream& os, double coef, const std::string& name,
                 bool first) {
  if (first) os << ' ';
  if (coef < 0) {
    os << (first ? "-" : " - ");
    coef = -coef;
  } else if (!first) {
    os << " + ";
  }
  if (coef != 1.0) os << number(coef) << ' ';
  os << name;
}

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

const char* to_string(MilpStatus status) {
  switch (status) {
    case MilpStatus::kOptimal: return "optimal";
    case MilpStatus::kInfeasible: return "infeasible";
    case MilpStatus::kUnbounded: return "unbounded";
    case MilpStatus::kNodeLimit: return "node_limit";
  }
  return "unknown";
}

int LinearProgram::add_column(double lo, double hi, double cost,
                              std::string name) {
  if (column_names.size() == objective.size())
    column_names.push_back(std::move(name));
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  return num_columns() - 1;
}

int LinearProgram::add_row(std::span<const RowEntry> row, RowSense sense,
                           double rhs_value, std::string name) {
  const int r = num_rows();
  for (const RowEntry& e : row) entries.push_back({r, e.col, e.value});
  if (row_names.size() == rhs.size()) row_names.push_back(std::move(name));
  row_senses.push_back(sense);
  rhs.push_back(rhs_value);
  return r;
}

void LinearProgram::validate() const {
  const int n = num_columns();
  const int m = num_rows();
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n)
    throw_validation("column bound vectors do not match objective length");
  if (!column_names.empty() && static_cast<int>(column_names.size()) != n)
    throw_validation("column name count does not match column count");
  if (static_cast<int>(row_senses.size()) != m)
    throw_validation("row sense count does not match rhs length");
  if (!row_names.empty() && static_cast<int>(row_names.size()) != m)
    throw_validation("row name count does not match row count");
  for (int j = 0; j < n; ++j) {
    if (!is_finite(objective[j]))
      throw_validation("non-finite objective coefficient at column " +
                       std::to_string(j));
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j] ||
        lower[j] == kInfinity || upper[j] == -kInfinity)
      throw_validation("invalid bounds at column " + std::to_string(j));
  }
  for (int i = 0; i < m; ++i)
    if (!is_finite(rhs[i]))
      throw_validation("non-finite rhs at row " + std::to_string(i));
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= m || t.col < 0 || t.col >= n)
      throw_validation("matrix entry out of range");
    if (!is_finite(t.value)) throw_validation("non-finite matrix entry");
  }
}

double LinearProgram::objective_value(std::span<const double> x) const {
  double z = 0.0;
  for (int j = 0; j < num_columns(); ++j) z += objective[j] * x[j];
  return z;
}

std::vector<double> LinearProgram::row_activity(
    std::span<const double> x) const {
  std::vector<double> act(num_rows(), 0.0);
  for (const Triplet& t : entries) act[t.row] += t.value * x[t.col];
  return act;
}

double LinearProgram::max_violation(std::span<const double> x) const {
  double worst = 0.0;
  for (int j = 0; j < num_columns(); ++j) {
    worst = std::max(worst, lower[j] - x[j]);
    worst = std::max(worst, x[j] - upper[j]);
  }
  const std::vector<double> act = row_activity(x);
  for (int i = 0; i < num_rows(); ++i) {
    const double diff = act[i] - rhs[i];
    switch (row_senses[i]) {
      case RowSense::kLessEqual: worst = std::max(worst, diff); break;
      case RowSense::kGreaterEqual: worst = std::max(worst, -diff); break;
      case RowSense::kEqual: worst = std::max(worst, std::abs(diff)); break;
    }
  }
  return worst;
}

std::string to_lp_format(const LinearProgram& lp,
                         std::span<const int> binaries) {
  lp.validate();
  std::ostringstream os;
  os << "\\ regcap model\n";
  os << (lp.sense == Sense::kMaximize ? "Maximize\n" : "Minimize\n");
  os << " obj:";
  bool first = true;
  for (int j = 0; j < lp.num_columns(); ++j) {
    if (lp.objective[j] == 0.0) continue;
    append_term(os, lp.objective[j], column_label(lp, j), first);
    first = false;
  }
  if (first) os << " 0 " << column_label(lp, 0);
  os << "\nSubject To\n";
  std::vector<std::vector<RowEntry>> rows(lp.num_rows());
  for (const Triplet& t : lp.entries) rows[t.row].push_back({t.col, t.value});
  for (int i = 0; i < lp.num_rows(); ++i) {
    os << ' ' << row_label(lp, i) << ':';
    first = true;
    for (const RowEntry& e : rows[i]) {
      append_term(os, e.value, column_label(lp, e.col), first);
      first = false;
    }
    if (first) os << " 0 " << column_label(lp, 0);
    switch (lp.row_senses[i]) {
      case RowSense::kLessEqual: os << " <= "; break;
      case RowSense::kGreaterEqual: os << " >= "; break;
      case RowSense::kEqual: os << " = "; break;
    }
    os << number(lp.rhs[i]) << '\n';
  }
  os << "Bounds\n";
  for (int j = 0; j < lp.num_columns(); ++j) {
    const std::string name = column_label(lp, j);
    const double lo = lp.lower[j];
    const double hi = lp.upper[j];
    if (!is_finite(lo) && !is_finite(hi)) {
      os << ' ' << name << " free\n";
    } else if (lo == hi) {
      os << ' ' << name << " = " << number(lo) << '\n';
    } else {
      os << ' ' << (is_finite(lo) ? number(lo) : "-inf") << " <= " << name
         << " <= " << (is_finite(hi) ? number(hi) : "+inf") << '\n';
    }
  }
  if (!binaries.empty()) {
    os << "Binaries\n";
    for (int b : binaries) os << ' ' << column_label(lp, b) << '\n';
  }
  os << "End\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// SimplexSolver

SimplexSolver::SimplexSolver(LinearProgram lp) : lp_(std::move(lp)) {
  lp_.validate();
  n_ = lp_.num_columns();
  m_ = lp_.num_rows();
  cols_.assign(n_, {});
  for (const Triplet& t : lp_.entries)
    if (t.value != 0.0) cols_[t.col].push_back({t.row, t.value});
  for (auto& col : cols_) {
    std::stable_sort(col.begin(), col.end(),
                     [](const ColEntry& a, const ColEntry& b) {
                       return a.row < b.row;
                     });
    // merge duplicate (row, col) entries
    std::vector<ColEntry> merged;
    for (const ColEntry& e : col) {
      if (!merged.empty() && merged.back().row == e.row)
        merged.back().value += e.value;
      else
        merged.push_back(e);
    }
    col.swap(merged);
  }
  const double sign = lp_.sense == Sense::kMaximize ? -1.0 : 1.0;
  cost_.assign(n_ + m_, 0.0);
  lo_.resize(n_ + m_);
  hi_.resize(n_ + m_);
  for (int j = 0; j < n_; ++j) {
    cost_[j] = sign * lp_.objective[j];
    lo_[j] = lp_.lower[j];
    hi_[j] = lp_.upper[j];
  }
  for (int i = 0; i < m_; ++i) {
    switch (lp_.row_senses[i]) {
      case RowSense::kLessEqual:
        lo_[n_ + i] = 0.0;
        hi_[n_ + i] = kInfinity;
        break;
      case RowSense::kGreaterEqual:
        lo_[n_ + i] = -kInfinity;
        hi_[n_ + i] = 0.0;
        break;
      case RowSense::kEqual:
        lo_[n_ + i] = 0.0;
        hi_[n_ + i] = 0.0;
        break;
    }
  }
  b_ = lp_.rhs;
  x_.assign(n_ + m_, 0.0);
  status_.assign(n_ + m_, VarStatus::kAtLower);
  reset_to_slack_basis();
}

double SimplexSolver::col_dot(int j, const std::vector<double>& v) const {
  if (j >= n_) return v[j - n_];
  double s = 0.0;
  for (const ColEntry& e : cols_[j]) s += e.value * v[e.row];
  return s;
}

double SimplexSolver::tolerance_for(double bound) const {
  return Tolerances::kFeasibility * std::max(1.0, std::abs(bound));
}

void SimplexSolver::place_nonbasic(int j) {
  if (is_finite(lo_[j])) {
    status_[j] = VarStatus::kAtLower;
    x_[j] = lo_[j];
  } else if (is_finite(hi_[j])) {
    status_[j] = VarStatus::kAtUpper;
    x_[j] = hi_[j];
  } else {
    status_[j] = VarStatus::kFree;
    x_[j] = 0.0;
  }
}

void SimplexSolver::reset_to_slack_basis() {
  head_.resize(m_);
  for (int j = 0; j < n_; ++j) place_nonbasic(j);
  for (int i = 0; i < m_; ++i) {
    head_[i] = n_ + i;
    status_[n_ + i] = VarStatus::kBasic;
  }
  binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) binv_[static_cast<size_t>(i) * m_ + i] = 1.0;
  factored_ = true;
  pivots_since_refactor_ = 0;
  recompute_basic_values();
}

bool SimplexSolver::refactor() {
  // Gauss-Jordan on [B | I] that follows nonzeros: rows holding a nonzero
  // in each column are tracked as fill appears, columns are processed
  // sparsest first and the pivot row is the largest unused entry.
  const size_t m = m_;
  std::vector<double> a(m * m, 0.0);
  std::vector<double> inv(m * m, 0.0);
  std::vector<std::vector<int>> col_rows(m);
  std::vector<int> order(m);
  for (size_t i = 0; i < m; ++i) {
    const int j = head_[i];
    if (j < n_) {
      for (const ColEntry& e : cols_[j]) {
        a[e.row * m + i] = e.value;
        col_rows[i].push_back(e.row);
      }
    } else {
      a[(j - n_) * m + i] = 1.0;
      col_rows[i].push_back(j - n_);
    }
    inv[i * m + i] = 1.0;
    order[i] = static_cast<int>(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return col_rows[x].size() < col_rows[y].size();
  });
  std::vector<char> used(m, 0);
  std::vector<int> pivot_row(m, -1);
  std::vector<size_t> nz_a;
  std::vector<size_t> nz_inv;
  for (const int kk : order) {
    const size_t k = kk;
    int p = -1;
    double best = 0.0;
    for (const int r : col_rows[k]) {
      if (used[r]) continue;
      const double v = std::abs(a[r * m + k]);
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (p < 0 || best < 1e-11) {
      factored_ = false;
      return false;
    }
    used[p] = 1;
    pivot_row[k] = p;
    double* prow = &a[p * m];
    double* pinv = &inv[p * m];
    const double piv = prow[k];
    nz_a.clear();
    nz_inv.clear();
    for (size_t c = 0; c < m; ++c) {
      if (prow[c] != 0.0) {
        prow[c] /= piv;
        if (c != k) nz_a.push_back(c);
      }
      if (pinv[c] != 0.0) {
        pinv[c] /= piv;
        nz_inv.push_back(c);
      }
    }
    for (const int i : col_rows[k]) {
      if (i == p) continue;
      double* row = &a[static_cast<size_t>(i) * m];
      const double f = row[k];
      if (f == 0.0) continue;
      double* irow = &inv[static_cast<size_t>(i) * m];
      for (const size_t c : nz_a) {
        if (row[c] == 0.0) col_rows[c].push_back(i);
        row[c] -= f * prow[c];
      }
      for (const size_t c : nz_inv) irow[c] -= f * pinv[c];
      row[k] = 0.0;
    }
  }
  // row pivot_row[k] of inv is now row k of the inverse
  for (size_t k = 0; k < m; ++k)
    std::copy_n(inv.begin() + pivot_row[k] * m, m, a.begin() + k * m);
  binv_.swap(a);
  factored_ = true;
  pivots_since_refactor_ = 0;
  return true;
}

void SimplexSolver::refactor_or_reset() {
  if (refactor())
    recompute_basic_values();
  else
    reset_to_slack_basis();
}

void SimplexSolver::recompute_basic_values() {
  std::vector<double> r = b_;
  for (int j = 0; j < num_total(); ++j) {
    if (status_[j] == VarStatus::kBasic || x_[j] == 0.0) continue;
    if (j < n_) {
      for (const ColEntry& e : cols_[j]) r[e.row] -= e.value * x_[j];
    } else {
      r[j - n_] -= x_[j];
    }
  }
  for (int i = 0; i < m_; ++i) {
    const double* row = &binv_[static_cast<size_t>(i) * m_];
    double s = 0.0;
    for (int k = 0; k < m_; ++k) s += row[k] * r[k];
    x_[head_[i]] = s;
  }
}

void SimplexSolver::fill_costs(Phase phase,
                               std::vector<double>& cost_basic) const {
  cost_basic.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    const int j = head_[i];
    if (phase == Phase::kTwo) {
      cost_basic[i] = cost_[j];
    } else if (x_[j] < lo_[j] - tolerance_for(lo_[j])) {
      cost_basic[i] = -1.0;
    } else if (x_[j] > hi_[j] + tolerance_for(hi_[j])) {
      cost_basic[i] = 1.0;
    }
  }
}

void SimplexSolver::compute_duals(const std::vector<double>& cost_basic) {
  y_.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    const double c = cost_basic[i];
    if (c == 0.0) continue;
    const double* row = &binv_[static_cast<size_t>(i) * m_];
    for (int k = 0; k < m_; ++k) y_[k] += c * row[k];
  }
}

double SimplexSolver::reduced_cost(int j, Phase phase) const {
  const double c = phase == Phase::kTwo ? cost_[j] : 0.0;
  return c - col_dot(j, y_);
}

void SimplexSolver::ftran(int q, std::vector<double>& alpha) const {
  alpha.assign(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    const double* row = &binv_[static_cast<size_t>(i) * m_];
    if (q >= n_) {
      alpha[i] = row[q - n_];
    } else {
      double s = 0.0;
      for (const ColEntry& e : cols_[q]) s += row[e.row] * e.value;
      alpha[i] = s;
    }
  }
}

void SimplexSolver::pivot(int r, int q, const std::vector<double>& alpha) {
  const size_t m = m_;
  double* prow = &binv_[r * m];
  const double ar = alpha[r];
  std::vector<size_t> nz;
  for (size_t c = 0; c < m; ++c) {
    if (prow[c] != 0.0) {
      prow[c] /= ar;
      nz.push_back(c);
    }
  }
  for (size_t i = 0; i < m; ++i) {
    if (static_cast<int>(i) == r || alpha[i] == 0.0) continue;
    const double f = alpha[i];
    double* row = &binv_[i * m];
    for (size_t c : nz) row[c] -= f * prow[c];
  }
  head_[r] = q;
  ++pivots_since_refactor_;
  ++total_pivots_;
  if (pivots_since_refactor_ >= kRefactorInterval) refactor_or_reset();
}

double SimplexSolver::infeasibility_of(int j) const {
  if (x_[j] < lo_[j] - tolerance_for(lo_[j])) return lo_[j] - x_[j];
  if (x_[j] > hi_[j] + tolerance_for(hi_[j])) return x_[j] - hi_[j];
  return 0.0;
}

double SimplexSolver::total_infeasibility() const {
  double s = 0.0;
  for (int i = 0; i < m_; ++i) s += infeasibility_of(head_[i]);
  return s;
}

bool SimplexSolver::make_dual_feasible() {
  std::vector<double> cb;
  fill_costs(Phase::kTwo, cb);
  compute_duals(cb);
  constexpr double kTol = 1e-7;
  bool flipped = false;
  for (int j = 0; j < num_total(); ++j) {
    if (status_[j] == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
    const double d = reduced_cost(j, Phase::kTwo);
    const bool ok = (status_[j] == VarStatus::kAtLower && d >= -kTol) ||
                    (status_[j] == VarStatus::kAtUpper && d <= kTol) ||
                    (status_[j] == VarStatus::kFree && std::abs(d) <= kTol);
    if (ok) continue;
    if (!is_finite(lo_[j]) || !is_finite(hi_[j])) return false;
    status_[j] = d < 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
    x_[j] = d < 0 ? hi_[j] : lo_[j];
    flipped = true;
  }
  if (flipped) recompute_basic_values();
  return true;
}

SimplexSolver::StepResult SimplexSolver::primal_step(Phase phase, bool bland) {
  std::vector<double> cb;
  fill_costs(phase, cb);
  compute_duals(cb);

  int q = -1;
  double dir = 0.0;
  double best_score = 0.0;
  for (int j = 0; j < num_total(); ++j) {
    const VarStatus st = status_[j];
    if (st == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
    const double d = reduced_cost(j, phase);
    double score = 0.0;
    double jdir = 0.0;
    if (st == VarStatus::kAtLower && d < -Tolerances::kOptimality) {
      score = -d;
      jdir = 1.0;
    } else if (st == VarStatus::kAtUpper && d > Tolerances::kOptimality) {
      score = d;
      jdir = -1.0;
    } else if (st == VarStatus::kFree &&
               std::abs(d) > Tolerances::kOptimality) {
      score = std::abs(d);
      jdir = d < 0 ? 1.0 : -1.0;
    } else {
      continue;
    }
    if (q < 0 || score > best_score) {
      q = j;
      dir = jdir;
      best_score = score;
      if (bland) break;
    }
  }
  if (q < 0) return StepResult::kOptimal;

  std::vector<double> alpha;
  ftran(q, alpha);

  // Two-pass (Harris) ratio test. Pass one finds the largest step that
  // keeps every basic variable within its bounds relaxed by the
  // tolerance; pass two picks the largest pivot among the rows that block
  // no later than that step.
  struct Limit {
    int row;
    double t;
    double bound;
  };
  std::vector<Limit> limits;
  double t_relaxed = kInfinity;
  for (int i = 0; i < m_; ++i) {
    const double a = alpha[i];
    if (std::abs(a) <= Tolerances::kPivot) continue;
    const double delta = -dir * a;
    const int j = head_[i];
    const double xv = x_[j];
    const double lo = lo_[j];
    const double hi = hi_[j];
    const bool below = xv < lo - tolerance_for(lo);
    const bool above = xv > hi + tolerance_for(hi);
    double bound = 0.0;
    bool limited = false;
    if (phase == Phase::kOne && below) {
      if (delta > 0) {
        bound = lo;
        limited = true;
      }
    } else if (phase == Phase::kOne && above) {
      if (delta < 0) {
        bound = hi;
        limited = true;
      }
    } else if (delta < 0 && is_finite(lo)) {
      bound = lo;
      limited = true;
    } else if (delta > 0 && is_finite(hi)) {
      bound = hi;
      limited = true;
    }
    if (!limited) continue;
    const double gap = std::abs(bound - xv);
    const double t = std::max(0.0, gap / std::abs(delta));
    const double relaxed = (gap + 0.5 * tolerance_for(bound)) / std::abs(delta);
    limits.push_back({i, t, bound});
    t_relaxed = std::min(t_relaxed, relaxed);
  }

  double theta = hi_[q] - lo_[q];  // bound flip distance (inf if unboxed)
  int r = -1;
  double leave_bound = 0.0;
  if (!limits.empty()) {
    if (bland) {
      // smallest ratio, ties to lowest variable index
      for (const Limit& l : limits) {
        if (r < 0 || l.t < theta - 1e-12 ||
            (std::abs(l.t - theta) <= 1e-12 && head_[l.row] < head_[r])) {
          if (l.t <= theta) {
            r = l.row;
            theta = l.t;
            leave_bound = l.bound;
          }
        }
      }
    } else if (t_relaxed < theta) {
      double best_pivot = 0.0;
      for (const Limit& l : limits) {
        if (l.t > t_relaxed) continue;
        const double piv = std::abs(alpha[l.row]);
        if (r < 0 || piv > best_pivot ||
            (piv == best_pivot && head_[l.row] < head_[r])) {
          r = l.row;
          best_pivot = piv;
          leave_bound = l.bound;
          theta = l.t;
        }
      }
    }
  }

  if (!is_finite(theta)) {
    if (phase == Phase::kOne) return StepResult::kInfeasible;
    ray_.assign(n_, 0.0);
    if (q < n_) ray_[q] = dir;
    for (int i = 0; i < m_; ++i)
      if (head_[i] < n_) ray_[head_[i]] = -dir * alpha[i];
    return StepResult::kUnbounded;
  }

  degenerate_run_ = theta <= 1e-12 ? degenerate_run_ + 1 : 0;
  const double step = dir * theta;
  x_[q] += step;
  for (int i = 0; i < m_; ++i)
    if (alpha[i] != 0.0) x_[head_[i]] -= step * alpha[i];

  if (r < 0) {
    // the entering variable reaches its opposite bound first
    if (dir > 0) {
      status_[q] = VarStatus::kAtUpper;
      x_[q] = hi_[q];
    } else {
      status_[q] = VarStatus::kAtLower;
      x_[q] = lo_[q];
    }
    return StepResult::kContinue;
  }
  const int leaving = head_[r];
  x_[leaving] = leave_bound;
  status_[leaving] = leave_bound == lo_[leaving] ? VarStatus::kAtLower
                                                 : VarStatus::kAtUpper;
  status_[q] = VarStatus::kBasic;
  pivot(r, q, alpha);
  return StepResult::kContinue;
}

SimplexSolver::StepResult SimplexSolver::dual_step() {
  int r = -1;
  double worst = 0.0;
  for (int i = 0; i < m_; ++i) {
    const double v = infeasibility_of(head_[i]);
    if (v > worst) {
      worst = v;
      r = i;
    }
  }
  if (r < 0) return StepResult::kOptimal;

  std::vector<double> cb;
  fill_costs(Phase::kTwo, cb);
  compute_duals(cb);

  const int leaving = head_[r];
  const bool below = x_[leaving] < lo_[leaving];
  const double target = below ? lo_[leaving] : hi_[leaving];
  const double sgn = below ? 1.0 : -1.0;
  std::vector<double> rho(binv_.begin() + static_cast<size_t>(r) * m_,
                          binv_.begin() + static_cast<size_t>(r + 1) * m_);

  int q = -1;
  double best_ratio = kInfinity;
  double best_pivot = 0.0;
  for (int j = 0; j < num_total(); ++j) {
    const VarStatus st = status_[j];
    if (st == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
    const double arj = col_dot(j, rho);
    if (std::abs(arj) <= Tolerances::kPivot) continue;
    const double d = reduced_cost(j, Phase::kTwo);
    double dd = 0.0;
    if (st == VarStatus::kAtLower) {
      if (arj * sgn >= 0) continue;
      dd = std::max(d, 0.0);
    } else if (st == VarStatus::kAtUpper) {
      if (arj * sgn <= 0) continue;
      dd = std::max(-d, 0.0);
    } else {
      dd = std::abs(d);
    }
    const double ratio = dd / std::abs(arj);
    if (q < 0 || ratio < best_ratio - 1e-12 ||
        (ratio <= best_ratio + 1e-12 && std::abs(arj) > best_pivot)) {
      q = j;
      best_ratio = ratio;
      best_pivot = std::abs(arj);
    }
  }
  if (q < 0) return StepResult::kInfeasible;

  std::vector<double> alpha;
  ftran(q, alpha);
  if (std::abs(alpha[r]) <= Tolerances::kPivot) {
    refactor_or_reset();
    return StepResult::kContinue;
  }
  const double dx = (x_[leaving] - target) / alpha[r];
  x_[q] += dx;
  for (int i = 0; i < m_; ++i)
    if (alpha[i] != 0.0) x_[head_[i]] -= alpha[i] * dx;
  x_[leaving] = target;
  status_[leaving] = below ? VarStatus::kAtLower : VarStatus::kAtUpper;
  status_[q] = VarStatus::kBasic;
  pivot(r, q, alpha);
  return StepResult::kContinue;
}

LpResult SimplexSolver::finish(LpStatus status) {
  LpResult res;
  res.status = status;
  res.iterations = iterations_;
  res.x.assign(x_.begin(), x_.begin() + n_);
  res.objective = lp_.objective_value(res.x);
  const double sign = lp_.sense == Sense::kMaximize ? -1.0 : 1.0;
  std::vector<double> cb;
  if (status == LpStatus::kInfeasible) {
    fill_costs(Phase::kOne, cb);
    compute_duals(cb);
    res.farkas = y_;
    res.infeasibility = total_infeasibility();
    return res;
  }
  if (status == LpStatus::kUnbounded) res.ray = ray_;
  fill_costs(Phase::kTwo, cb);
  compute_duals(cb);
  res.row_duals.resize(m_);
  for (int i = 0; i < m_; ++i) res.row_duals[i] = sign * y_[i];
  res.reduced_costs.resize(n_);
  double g = 0.0;
  for (int i = 0; i < m_; ++i) g += b_[i] * y_[i];
  for (int j = 0; j < num_total(); ++j) {
    const double d = reduced_cost(j, Phase::kTwo);
    if (j < n_) res.reduced_costs[j] = sign * d;
    if (std::abs(d) <= Tolerances::kOptimality) {
      g += d * x_[j];
    } else if (d > 0) {
      g += is_finite(lo_[j]) ? d * lo_[j] : -kInfinity;
    } else {
      g += is_finite(hi_[j]) ? d * hi_[j] : -kInfinity;
    }
  }
  res.dual_objective = sign * g;
  return res;
}

LpResult SimplexSolver::solve() {
  iterations_ = 0;
  degenerate_run_ = 0;
  if (!factored_)
    refactor_or_reset();
  else
    recompute_basic_values();
  const int limit = std::max(20000, 50 * num_total());

  if (total_infeasibility() > 0.0 && make_dual_feasible()) {
    while (iterations_ < limit) {
      const StepResult s = dual_step();
      ++iterations_;
      if (s != StepResult::kContinue) break;
    }
  }

  bool bland = false;
  while (iterations_ < limit) {
    const bool infeasible = total_infeasibility() > 0.0;
    const StepResult s =
        primal_step(infeasible ? Phase::kOne : Phase::kTwo, bland);
    ++iterations_;
    if (s == StepResult::kOptimal || s == StepResult::kInfeasible) {
      if (pivots_since_refactor_ > 0) {
        // confirm on a fresh factorization before declaring
        refactor_or_reset();
        continue;
      }
      return finish(infeasible ? LpStatus::kInfeasible : LpStatus::kOptimal);
    }
    if (s == StepResult::kUnbounded) return finish(LpStatus::kUnbounded);
    if (degenerate_run_ >= kDegeneratePivotsBeforeBland) bland = true;
  }
  return finish(LpStatus::kIterationLimit);
}

void SimplexSolver::add_cut(std::span<const RowEntry> row, double rhs) {
  if (!is_finite(rhs)) throw_argument("cut rhs must be finite");
  std::vector<double> dense(n_, 0.0);
  for (const RowEntry& e : row) {
    if (e.col < 0 || e.col >= n_)
      throw_argument("cut references column " + std::to_string(e.col) +
                     " outside the model");
    if (!is_finite(e.value)) throw_argument("non-finite cut coefficient");
    dense[e.col] += e.value;
  }
  const int r = m_;
  for (int j = 0; j < n_; ++j)
    if (dense[j] != 0.0) cols_[j].push_back({r, dense[j]});
  lp_.add_row(row, RowSense::kLessEqual, rhs, "cut" + std::to_string(r));
  b_.push_back(rhs);
  cost_.push_back(0.0);
  lo_.push_back(0.0);
  hi_.push_back(kInfinity);
  status_.push_back(VarStatus::kBasic);
  double act = 0.0;
  for (int j = 0; j < n_; ++j) act += dense[j] * x_[j];
  x_.push_back(rhs - act);

  if (factored_) {
    // [B 0; r_B 1]^-1 = [B^-1 0; -r_B B^-1 1]
    const size_t old_m = m_;
    const size_t m = old_m + 1;
    std::vector<double> next(m * m, 0.0);
    for (size_t i = 0; i < old_m; ++i)
      std::copy(binv_.begin() + i * old_m, binv_.begin() + (i + 1) * old_m,
                next.begin() + i * m);
    for (size_t i = 0; i < old_m; ++i) {
      const int j = head_[i];
      const double coef = j < n_ ? dense[j] : 0.0;
      if (coef == 0.0) continue;
      for (size_t k = 0; k < old_m; ++k)
        next[old_m * m + k] -= coef * binv_[i * old_m + k];
    }
    next[old_m * m + old_m] = 1.0;
    binv_.swap(next);
  }
  head_.push_back(n_ + r);
  m_ = r + 1;
}

void SimplexSolver::set_column_bounds(int col, double lo, double hi) {
  if (col < 0 || col >= n_) throw_argument("column index out of range");
  if (std::isnan(lo) || std::isnan(hi) || lo > hi || lo == kInfinity ||
      hi == -kInfinity)
    throw_argument("invalid column bounds");
  lo_[col] = lo;
  hi_[col] = hi;
  lp_.lower[col] = lo;
  lp_.upper[col] = hi;
  if (status_[col] == VarStatus::kBasic) return;
  if (status_[col] == VarStatus::kAtLower && is_finite(lo))
    x_[col] = lo;
  else if (status_[col] == VarStatus::kAtUpper && is_finite(hi))
    x_[col] = hi;
  else
    place_nonbasic(col);
}

Basis SimplexSolver::basis() const { return {head_, status_}; }

void SimplexSolver::set_basis(const Basis& basis) {
  if (static_cast<int>(basis.head.size()) != m_ ||
      static_cast<int>(basis.status.size()) != num_total())
    throw_argument("basis dimensions do not match the model");
  int basic = 0;
  for (VarStatus s : basis.status) basic += s == VarStatus::kBasic;
  if (basic != m_) throw_argument("basis has wrong number of basic columns");
  for (int j : basis.head)
    if (j < 0 || j >= num_total() || basis.status[j] != VarStatus::kBasic)
      throw_argument("basis head inconsistent with statuses");
  head_ = basis.head;
  status_ = basis.status;
  for (int j = 0; j < num_total(); ++j) {
    switch (status_[j]) {
      case VarStatus::kBasic: break;
      case VarStatus::kAtLower:
        if (is_finite(lo_[j])) x_[j] = lo_[j]; else place_nonbasic(j);
        break;
      case VarStatus::kAtUpper:
        if (is_finite(hi_[j])) x_[j] = hi_[j]; else place_nonbasic(j);
        break;
      case VarStatus::kFree:
        if (is_finite(lo_[j]) || is_finite(hi_[j])) place_nonbasic(j);
        else x_[j] = 0.0;
        break;
    }
  }
  factored_ = false;
}

LpResult solve_lp(const LinearProgram& lp) {
  SimplexSolver solver(lp);
  return solver.solve();
}

// ---------------------------------------------------------------------------
// Branch and bound

void MixedIntegerProgram::validate() const {
  lp.validate();
  std::vector<char> seen(lp.num_columns(), 0);
  for (int b : binaries) {
    if (b < 0 || b >= lp.num_columns())
      throw_validation("binary index out of range");
    if (seen[b]) throw_validation("duplicate binary index");
    seen[b] = 1;
  }
}

namespace {

struct Node {
  double bound;  // minimization form
  long id;
  long parent;
  std::vector<signed char> fix;  // -1 free, 0 or 1 fixed
  Basis basis;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id < b.id;  // newer node first on ties
  }
};

}  // namespace

MilpResult solve_milp(const MixedIntegerProgram& mip,
                      const MilpOptions& options) {
  mip.validate();
  const LinearProgram& lp = mip.lp;
  const double sign = lp.sense == Sense::kMaximize ? -1.0 : 1.0;
  const size_t nb = mip.binaries.size();
  std::vector<double> base_lo(nb);
  std::vector<double> base_hi(nb);
  for (size_t k = 0; k < nb; ++k) {
    base_lo[k] = std::max(lp.lower[mip.binaries[k]], 0.0);
    base_hi[k] = std::min(lp.upper[mip.binaries[k]], 1.0);
  }

  MilpResult out;
  for (size_t k = 0; k < nb; ++k) {
    if (std::ceil(base_lo[k]) > std::floor(base_hi[k])) {
      out.status = MilpStatus::kInfeasible;
      return out;
    }
    base_lo[k] = std::ceil(base_lo[k]);
    base_hi[k] = std::floor(base_hi[k]);
  }

  SimplexSolver solver(lp);
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  open.push({-kInfinity, 0, -1, std::vector<signed char>(nb, -1), {}});
  long next_id = 1;
  long last_solved = -2;
  bool basis_moved = false;
  double incumbent = kInfinity;
  std::vector<double> best_x;

  auto global_bound = [&]() {
    return open.empty() ? incumbent : std::min(open.top().bound, incumbent);
  };
  auto closes_gap = [&](double lb) {
    return incumbent < kInfinity &&
           incumbent - lb <=
               options.relative_gap * std::max(1.0, std::abs(incumbent));
  };

  bool hit_limit = false;
  double pruned_bound = kInfinity;
  while (!open.empty()) {
    if (out.nodes >= options.node_limit) {
      hit_limit = true;
      break;
    }
    if (closes_gap(open.top().bound)) {
      // best-first: every remaining node is at least this bound
      pruned_bound = open.top().bound;
      while (!open.empty()) open.pop();
      break;
    }
    Node node = open.top();
    open.pop();

    for (size_t k = 0; k < nb; ++k) {
      const double lo = node.fix[k] < 0 ? base_lo[k] : node.fix[k];
      const double hi = node.fix[k] < 0 ? base_hi[k] : node.fix[k];
      solver.set_column_bounds(mip.binaries[k], lo, hi);
    }
    if (!node.basis.head.empty() &&
        (node.parent != last_solved || basis_moved))
      solver.set_basis(node.basis);
    LpResult res = solver.solve();
    ++out.nodes;
    last_solved = node.id;
    basis_moved = false;

    if (res.status == LpStatus::kUnbounded) {
      out.status = MilpStatus::kUnbounded;
      out.x = res.x;
      out.objective = sign * -kInfinity;
      out.bound = out.objective;
      return out;
    }
    if (res.status == LpStatus::kIterationLimit)
      throw Error(ErrorKind::kSolver,
                  "LP relaxation hit the iteration limit at node " +
                      std::to_string(node.id));
    if (res.status == LpStatus::kOptimal) {
      const double z = sign * res.objective;
      if (!closes_gap(z) && z < incumbent) {
        int branch = -1;
        double most = Tolerances::kIntegrality;
        for (size_t k = 0; k < nb; ++k) {
          const double v = res.x[mip.binaries[k]];
          const double frac = std::abs(v - std::round(v));
          if (frac > most) {
            most = frac;
            branch = static_cast<int>(k);
          }
        }
        if (branch < 0) {
          // integral: polish with all binaries fixed
          for (size_t k = 0; k < nb; ++k) {
            const double v = std::round(res.x[mip.binaries[k]]);
            solver.set_column_bounds(mip.binaries[k], v, v);
          }
          LpResult pol = solver.solve();
          basis_moved = true;
          const LpResult& use = pol.status == LpStatus::kOptimal ? pol : res;
          const double zp = sign * use.objective;
          if (zp < incumbent) {
            incumbent = zp;
            best_x = use.x;
            for (size_t k = 0; k < nb; ++k)
              best_x[mip.binaries[k]] = std::round(best_x[mip.binaries[k]]);
          }
        } else {
          Basis b = solver.basis();
          const double v = res.x[mip.binaries[branch]];
          const signed char near = v >= 0.5 ? 1 : 0;
          Node far_child{z, next_id++, node.id, node.fix, b};
          far_child.fix[branch] = static_cast<signed char>(1 - near);
          Node near_child{z, next_id++, node.id, node.fix, std::move(b)};
          near_child.fix[branch] = near;
          open.push(std::move(far_child));
          open.push(std::move(near_child));
        }
      }
    }
    out.bound_trace.push_back(sign * global_bound());
  }

  if (incumbent == kInfinity) {
    out.status = hit_limit ? MilpStatus::kNodeLimit : MilpStatus::kInfeasible;
    out.bound = sign * global_bound();
    return out;
  }
  const double lb = std::min(global_bound(), pruned_bound);
  out.status = hit_limit ? MilpStatus::kNodeLimit : MilpStatus::kOptimal;
  out.x = std::move(best_x);
  out.objective = sign * incumbent;
  out.bound = sign * lb;
  out.gap = (incumbent - lb) / std::max(1.0, std::abs(incumbent));
  return out;
}

}  // namespace regcap::solver
