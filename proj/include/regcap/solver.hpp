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

#ifndef REGCAP_SOLVER_HPP_
#define REGCAP_SOLVER_HPP_

// Self-contained linear and mixed-binary programming kernels.
//
// The LP solver is a bounded-variable revised simplex method operating on
//
//   min/max  c'x   s.t.  A x (<=,=,>=) b,   l <= x <= u
//
// Each row i receives a logical (slack) column s_i with A x + s = b, so
// every variable, structural or logical, is simply a bounded column. The
// basis inverse is held densely and refreshed by Gauss-Jordan elimination
// every kRefactorInterval pivots; the constraint matrix is held sparsely.
// Phase one minimizes the sum of bound infeasibilities of the basic
// variables, so it can start from any basis, including a warm one. When a
// warm basis is dual feasible (after bound changes or appended cuts) the
// dual simplex method restores primal feasibility first.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace regcap::solver {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Tolerances {
  static constexpr double kFeasibility = 1e-8;
  static constexpr double kIntegrality = 1e-6;
  static constexpr double kOptimality = 1e-9;
  static constexpr double kPivot = 1e-9;
};

inline constexpr int kRefactorInterval = 50;
inline constexpr int kDegeneratePivotsBeforeBland = 1000;

enum class Sense { kMinimize, kMaximize };
enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct Triplet {
  int row;
  int col;
  double value;
};

struct RowEntry {
  int col;
  double value;
};

struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::string> column_names;
  std::vector<Triplet> entries;
  std::vector<RowSense> row_senses;
  std::vector<double> rhs;
  std::vector<std::string> row_names;

  int num_columns() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }

  int add_column(double lo, double hi, double cost, std::string name = {});
  int add_row(std::span<const RowEntry> row, RowSense sense, double rhs_value,
              std::string name = {});

  // Throws Error(kValidation) on inconsistent dimensions, lo > hi, NaNs or
  // out-of-range triplets.
  void validate() const;

  double objective_value(std::span<const double> x) const;
  std::vector<double> row_activity(std::span<const double> x) const;
  // Largest violation over rows and column bounds.
  double max_violation(std::span<const double> x) const;
};

// CPLEX LP-format text, for cross-checking a model with external tools.
std::string to_lp_format(const LinearProgram& lp,
                         std::span<const int> binaries = {});

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  // Objective in the program's own sense.
  double objective = 0.0;
  std::vector<double> x;
  // Marginal change of the objective per unit increase of each rhs.
  std::vector<double> row_duals;
  std::vector<double> reduced_costs;
  // Lagrangian dual bound at row_duals; equals objective at optimality.
  double dual_objective = 0.0;
  // Improving direction over structural columns when unbounded.
  std::vector<double> ray;
  // Phase-one row multipliers when infeasible; y'(b - A x) certifies a
  // strictly positive minimum infeasibility.
  std::vector<double> farkas;
  double infeasibility = 0.0;
  int iterations = 0;
};

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree };

struct Basis {
  std::vector<int> head;
  std::vector<VarStatus> status;
};

class SimplexSolver {
 public:
  explicit SimplexSolver(LinearProgram lp);

  // Solves from the current basis (slack basis on first call).
  LpResult solve();

  // Appends the row  sum(row) <= rhs. The slack of the new row enters the
  // basis, so the previous basis stays dual feasible and the next solve()
  // proceeds by dual simplex steps.
  void add_cut(std::span<const RowEntry> row, double rhs);

  void set_column_bounds(int col, double lo, double hi);

  Basis basis() const;
  void set_basis(const Basis& basis);

  const LinearProgram& program() const { return lp_; }
  long total_pivots() const { return total_pivots_; }

 private:
  struct ColEntry {
    int row;
    double value;
  };
  enum class Phase { kOne, kTwo };
  enum class StepResult { kContinue, kOptimal, kUnbounded, kInfeasible };

  int num_total() const { return n_ + m_; }
  double col_dot(int j, const std::vector<double>& v) const;
  double tolerance_for(double bound) const;
  void reset_to_slack_basis();
  void place_nonbasic(int j);
  bool refactor();
  void refactor_or_reset();
  void recompute_basic_values();
  void fill_costs(Phase phase, std::vector<double>& cost_basic) const;
  void compute_duals(const std::vector<double>& cost_basic);
  double reduced_cost(int j, Phase phase) const;
  void ftran(int q, std::vector<double>& alpha) const;
  void pivot(int r, int q, const std::vector<double>& alpha);
  double infeasibility_of(int j) const;
  double total_infeasibility() const;
  bool make_dual_feasible();
  StepResult primal_step(Phase phase, bool bland);
  StepResult dual_step();
  LpResult finish(LpStatus status);

  LinearProgram lp_;
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<ColEntry>> cols_;  // structural columns
  std::vector<double> cost_;                 // minimization form, size n_+m_
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<double> b_;
  std::vector<double> x_;
  std::vector<VarStatus> status_;
  std::vector<int> head_;
  std::vector<double> binv_;  // row-major m_ x m_
  std::vector<double> y_;
  bool factored_ = false;
  int pivots_since_refactor_ = 0;
  int degenerate_run_ = 0;
  long total_pivots_ = 0;
  int iterations_ = 0;
  std::vector<double> ray_;
};

LpResult solve_lp(const LinearProgram& lp);

struct MixedIntegerProgram {
  LinearProgram lp;
  std::vector<int> binaries;

  void validate() const;
};

struct MilpOptions {
  double relative_gap = 1e-6;
  long node_limit = 1'000'000;
};

enum class MilpStatus { kOptimal, kInfeasible, kUnbounded, kNodeLimit };

const char* to_string(MilpStatus status);

struct MilpResult {
  MilpStatus status = MilpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  // Best bound on the optimum, in the program's sense.
  double bound = 0.0;
  double gap = 0.0;
  long nodes = 0;
  // Global bound after each processed node (nonincreasing for maximization,
  // nondecreasing for minimization).
  std::vector<double> bound_trace;
};

// Best-first branch-and-bound over LP relaxations, branching on the most
// fractional binary. Incumbents are polished by re-solving the LP with all
// binaries fixed at their rounded values.
MilpResult solve_milp(const MixedIntegerProgram& mip,
                      const MilpOptions& options = {});

}  // namespace regcap::solver

#endif  // REGCAP_SOLVER_HPP_
