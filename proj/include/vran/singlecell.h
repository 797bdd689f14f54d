// Copyright 2026 The vRAN Scheduling Authors
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

// Solvers for the case where only the PON capacity C binds (one cell).
//
// An optimal solution exists in which every RB but at most one is either
// empty or filled to gamma ("almost discrete"). The solvers here exploit it:
//
//   solve_rlp            exact LP relaxation, returned as a vertex
//   rounding_ad          best of the integral LP part and the best single RB
//   dp_capacity          exact DP over (capacity, RB prefix)
//   dp_profit            exact DP over (RB prefix, profit) for full-rate RBs
//   fptas_discrete       profit-scaled dp_profit
//   half_approx_almost_discrete
//   dual_upper_bound     weak-duality certificate for any lambda >= 0

#ifndef VRAN_SINGLECELL_H_
#define VRAN_SINGLECELL_H_

#include <cstdint>
#include <vector>

#include "vran/model.h"

namespace vran::singlecell {

struct FractionalSolution {
  int users = 0;
  int rb_count = 0;
  std::vector<double> x;  // users x rb_count, row-major by user
  double lp_value = 0.0;
  // RBs with some 0 < x_jk < 1.
  std::vector<int> fractional_rbs;
  // Optimal multiplier of the capacity row.
  double capacity_dual = 0.0;
  int pivots = 0;

  double at(int user, int rb) const { return x[static_cast<std::size_t>(user) * rb_count + rb]; }
};

FractionalSolution solve_rlp(const SingleCellInstance& instance);

SolveResult rounding_ad(const SingleCellInstance& instance);

inline constexpr double kDefaultTableBudget = 1e8;

// V(M, k) for M in 0..C', k in 0..kappa, with the decision taken at each cell.
class DpTable {
 public:
  DpTable(std::int64_t capacity, int rb_count);

  std::int64_t capacity() const { return capacity_; }
  int rb_count() const { return rb_count_; }
  double value(std::int64_t m, int k) const { return values_[index(m, k)]; }
  // User given RB k (1-based prefix length) at capacity m; -1 if skipped.
  int chosen_user(std::int64_t m, int k) const { return users_[index(m, k)]; }
  std::int64_t chosen_rate(std::int64_t m, int k) const { return rates_[index(m, k)]; }

  void set(std::int64_t m, int k, double value, int user, std::int64_t rate) {
    const std::size_t i = index(m, k);
    values_[i] = value;
    users_[i] = user;
    rates_[i] = rate;
  }

 private:
  std::size_t index(std::int64_t m, int k) const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(capacity_ + 1) +
           static_cast<std::size_t>(m);
  }
  std::int64_t capacity_;
  int rb_count_;
  std::vector<double> values_;
  std::vector<std::int32_t> users_;
  std::vector<std::int64_t> rates_;
};

struct DpCapacityResult {
  SolveResult result;  // allocation in source capacity units
  DpTable table;
};

// Exact optimum of the quantized problem. Throws BudgetExceeded when the
// table would exceed `table_budget` cells.
DpCapacityResult dp_capacity(const QuantizedInstance& instance,
                             double table_budget = kDefaultTableBudget);

// Cmin(k, p): least capacity reaching profit exactly p with the first k RBs.
class ProfitTable {
 public:
  ProfitTable(int rb_count, std::int64_t max_profit);

  int rb_count() const { return rb_count_; }
  std::int64_t max_profit() const { return max_profit_; }
  double min_capacity(int k, std::int64_t p) const { return cmin_[index(k, p)]; }
  int chosen_user(int k, std::int64_t p) const { return users_[index(k, p)]; }

  void set(int k, std::int64_t p, double cmin, int user) {
    cmin_[index(k, p)] = cmin;
    users_[index(k, p)] = user;
  }

 private:
  std::size_t index(int k, std::int64_t p) const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(max_profit_ + 1) +
           static_cast<std::size_t>(p);
  }
  int rb_count_;
  std::int64_t max_profit_;
  std::vector<double> cmin_;
  std::vector<std::int32_t> users_;
};

struct DpProfitResult {
  SolveResult result;
  ProfitTable table;
  std::int64_t profit = 0;
};

// Best full-rate (discrete) solution maximizing sum of integer profits
// p[j * kappa + k] under the quantized capacity. Rates are reported in
// source units (gamma' * quantum).
DpProfitResult dp_profit(const QuantizedInstance& instance,
                         const std::vector<std::int64_t>& profits,
                         double table_budget = kDefaultTableBudget);

// Same recursion with real capacities: RB k given to user j consumes
// rate[j * kappa + k] and earns profits[j * kappa + k].
DpProfitResult dp_profit_real(const SingleCellInstance& instance,
                              const std::vector<double>& rate,
                              const std::vector<std::int64_t>& profits,
                              double table_budget = kDefaultTableBudget);

// Discrete solution with profit >= (1 - epsilon) of the best discrete one,
// rates clamped to C. Throws ParameterError unless 0 < epsilon < 1.
SolveResult fptas_discrete(const SingleCellInstance& instance, double epsilon,
                           double table_budget = kDefaultTableBudget);

// Better of fptas_discrete and the best single RB; >= (1/2 - epsilon) OPT.
SolveResult half_approx_almost_discrete(const SingleCellInstance& instance, double epsilon,
                                        double table_budget = kDefaultTableBudget);

// Best single-RB allocation: max_jk w_j * min(gamma_jk, C).
SolveResult best_single_rb(const SingleCellInstance& instance);

// sum_k z_k + lambda * C at the dual point mu_jk = max(0, w_j - lambda),
// z_k = max_j gamma_jk * mu_jk. Throws ParameterError for lambda < 0.
double dual_upper_bound(const SingleCellInstance& instance, double lambda);

}  // namespace vran::singlecell

#endif  // VRAN_SINGLECELL_H_
