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

#include "vran/singlecell.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "vran/alloc.h"
#include "vran/simplex.h"

namespace vran::singlecell {

namespace {

constexpr double kIntegralityTolerance = 1e-9;

void check_table_budget(double cells, double budget, const char* what) {
  if (cells > budget) {
    std::ostringstream msg;
    msg << std::fixed << std::setprecision(0) << what << " table needs " << cells << " cells, budget is " << budget
        << "; use a larger quantum or the FPTAS";
    throw BudgetExceeded(msg.str(), cells, budget);
  }
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
}

}  // namespace

FractionalSolution solve_rlp(const SingleCellInstance& instance) {
  const int n = instance.users();
  const int kappa = instance.rb_count();
  const double capacity = instance.total_capacity();

  FractionalSolution out;
  out.users = n;
  out.rb_count = kappa;
  out.x.assign(static_cast<std::size_t>(n) * kappa, 0.0);

  // Columns with zero profit stay at zero in some optimal vertex, and a
  // vertex of the restricted polytope is a vertex of the full one.
  struct Column {
    int user;
    int rb;
  };
  std::vector<Column> columns;
  double max_profit = 0.0;
  for (int k = 0; k < kappa; ++k) {
    for (int j = 0; j < n; ++j) {
      const double profit = instance.weight(j) * instance.gamma(j, k);
      if (profit > 0.0 && instance.gamma(j, k) > 0.0) {
        columns.push_back({j, k});
        max_profit = std::max(max_profit, profit);
      }
    }
  }
  if (columns.empty()) return out;
  if (capacity <= 0.0) {
    // Nothing fits; pricing capacity at the largest weight zeroes every RB.
    for (const Column& c : columns) out.capacity_dual = std::max(out.capacity_dual, instance.weight(c.user));
    return out;
  }

  // Rows: one per RB that has a column, then the capacity row scaled to rhs 1.
  std::vector<int> row_of_rb(kappa, -1);
  int rows = 0;
  for (const Column& c : columns) {
    if (row_of_rb[c.rb] < 0) row_of_rb[c.rb] = rows++;
  }
  const int capacity_row = rows++;
  DenseLp lp(rows, static_cast<int>(columns.size()));
  for (int r = 0; r < rows; ++r) lp.b[r] = 1.0;
  for (int col = 0; col < lp.cols; ++col) {
    const Column& c = columns[col];
    lp.at(row_of_rb[c.rb], col) = 1.0;
    lp.at(capacity_row, col) = instance.gamma(c.user, c.rb) / capacity;
    lp.c[col] = instance.weight(c.user) * instance.gamma(c.user, c.rb) / max_profit;
  }

  const LpSolution sol = solve_dense_lp(lp);
  if (sol.status != LpSolution::Status::kOptimal) {
    throw std::logic_error("RB relaxation simplex did not reach optimality");
  }
  out.pivots = sol.pivots;
  out.capacity_dual = sol.dual[capacity_row] * max_profit / capacity;

  std::vector<bool> fractional(kappa, false);
  for (int col = 0; col < lp.cols; ++col) {
    double v = std::clamp(sol.x[col], 0.0, 1.0);
    if (v < kIntegralityTolerance) v = 0.0;
    if (v > 1.0 - kIntegralityTolerance) v = 1.0;
    if (v > 0.0 && v < 1.0) fractional[columns[col].rb] = true;
    out.x[static_cast<std::size_t>(columns[col].user) * kappa + columns[col].rb] = v;
  }
  double value = 0.0;
  for (int col = 0; col < lp.cols; ++col) {
    const Column& c = columns[col];
    value += instance.weight(c.user) * instance.gamma(c.user, c.rb) *
             out.x[static_cast<std::size_t>(c.user) * kappa + c.rb];
  }
  out.lp_value = value;
  for (int k = 0; k < kappa; ++k) {
    if (fractional[k]) out.fractional_rbs.push_back(k);
  }
  if (out.fractional_rbs.size() > 1) {
    throw std::logic_error("RB relaxation returned a non-vertex solution");
  }
  return out;
}

SolveResult best_single_rb(const SingleCellInstance& instance) {
  const Instance& inst = instance.instance();
  const double capacity = instance.total_capacity();
  int best_user = -1;
  int best_rb = -1;
  double best = 0.0;
  for (int j = 0; j < instance.users(); ++j) {
    for (int k = 0; k < instance.rb_count(); ++k) {
      const double v = instance.weight(j) * std::min(instance.gamma(j, k), capacity);
      if (v > best) {
        best = v;
        best_user = j;
        best_rb = k;
      }
    }
  }
  Allocation alloc(inst);
  if (best_user >= 0) {
    alloc.mutable_assignment().assign(0, best_rb, best_user);
    alloc.set_rate(inst, 0, best_user, best_rb,
                   std::min(instance.gamma(best_user, best_rb), capacity));
  }
  return make_result(inst, std::move(alloc));
}

SolveResult rounding_ad(const SingleCellInstance& instance) {
  const Instance& inst = instance.instance();
  const FractionalSolution frac = solve_rlp(instance);

  Assignment integral(inst);
  double integral_value = 0.0;
  for (int j = 0; j < frac.users; ++j) {
    for (int k = 0; k < frac.rb_count; ++k) {
      if (frac.at(j, k) == 1.0) {
        integral.assign(0, k, j);
        integral_value += instance.weight(j) * instance.gamma(j, k);
      }
    }
  }
  // The integral RBs fit within C up to LP round-off; waterfill absorbs it.
  SolveResult from_lp = make_result(inst, waterfill(inst, integral));
  SolveResult single = best_single_rb(instance);

  const std::map<std::string, double> meta = {
      {"lp_optimum", frac.lp_value},
      {"integral_part", integral_value},
      {"f_max", single.objective},
      {"fractional_rbs", static_cast<double>(frac.fractional_rbs.size())},
      {"iterations", static_cast<double>(frac.pivots)},
      {"dual_upper_bound", dual_upper_bound(instance, frac.capacity_dual)},
  };
  const bool use_lp = from_lp.objective >= single.objective;
  SolveResult out = use_lp ? std::move(from_lp) : std::move(single);
  out.meta = meta;
  out.meta["single_rb_branch"] = use_lp ? 0.0 : 1.0;
  return out;
}

DpTable::DpTable(std::int64_t capacity, int rb_count)
    : capacity_(capacity),
      rb_count_(rb_count),
      values_(static_cast<std::size_t>(capacity + 1) * (rb_count + 1), 0.0),
      users_(values_.size(), -1),
      rates_(values_.size(), 0) {}

DpCapacityResult dp_capacity(const QuantizedInstance& instance, double table_budget) {
  const int n = instance.users();
  const int kappa = instance.rb_count();
  const std::int64_t cap = instance.capacity();
  check_table_budget(static_cast<double>(cap + 1) * (kappa + 1), table_budget, "capacity DP");

  DpTable table(cap, kappa);
  std::vector<double> best(cap + 1);
  std::vector<int> best_user(cap + 1);
  std::vector<std::int64_t> best_rate(cap + 1);
  std::deque<std::int64_t> window;

  for (int k = 1; k <= kappa; ++k) {
    // y = 0: the RB stays empty.
    for (std::int64_t m = 0; m <= cap; ++m) {
      best[m] = table.value(m, k - 1);
      best_user[m] = -1;
      best_rate[m] = 0;
    }
    for (int j = 0; j < n; ++j) {
      const std::int64_t g = instance.gamma(j, k - 1);
      const double w = instance.source().weight(j);
      if (g <= 0 || w <= 0.0) continue;
      // max over s in [m - g, m - 1] of V(s, k-1) + w (m - s): a sliding
      // window maximum of V(s, k-1) - w s.
      auto key = [&](std::int64_t s) { return table.value(s, k - 1) - w * static_cast<double>(s); };
      window.clear();
      for (std::int64_t m = 1; m <= cap; ++m) {
        const std::int64_t s_new = m - 1;
        while (!window.empty() && key(window.back()) <= key(s_new)) window.pop_back();
        window.push_back(s_new);
        while (window.front() < m - g) window.pop_front();
        const std::int64_t s = window.front();
        const std::int64_t y = m - s;
        const double v = table.value(s, k - 1) + w * static_cast<double>(y);
        if (v > best[m]) {
          best[m] = v;
          best_user[m] = j;
          best_rate[m] = y;
        }
      }
    }
    for (std::int64_t m = 0; m <= cap; ++m) table.set(m, k, best[m], best_user[m], best_rate[m]);
  }

  // Backtrack the assignment, then recompute rates by waterfilling the
  // dequantized problem so at most one RB ends up partially filled.
  const Instance& source = instance.source().instance();
  Assignment x(source);
  std::int64_t m = cap;
  for (int k = kappa; k >= 1; --k) {
    const int j = table.chosen_user(m, k);
    if (j >= 0) {
      x.assign(0, k - 1, j);
      m -= table.chosen_rate(m, k);
    }
  }
  const SingleCellInstance deq = instance.dequantized();
  Allocation filled = waterfill(deq.instance(), x);
  const double dp_value = table.value(cap, kappa);
  SolveResult result = make_result(source, Allocation(x, filled.rates()),
                                   {{"dp_value", dp_value},
                                    {"quantum", instance.quantum()},
                                    {"table_cells", static_cast<double>(cap + 1) * (kappa + 1)}});
  return DpCapacityResult{std::move(result), std::move(table)};
}

ProfitTable::ProfitTable(int rb_count, std::int64_t max_profit)
    : rb_count_(rb_count),
      max_profit_(max_profit),
      cmin_(static_cast<std::size_t>(rb_count + 1) * (max_profit + 1), kInfinity),
      users_(cmin_.size(), -1) {
  cmin_[0] = 0.0;
}

DpProfitResult dp_profit_real(const SingleCellInstance& instance, const std::vector<double>& rate,
                              const std::vector<std::int64_t>& profits, double table_budget) {
  const int n = instance.users();
  const int kappa = instance.rb_count();
  const auto size = static_cast<std::size_t>(n) * kappa;
  if (rate.size() != size || profits.size() != size) {
    throw StructuralError("profit/rate tensors do not match the instance");
  }
  std::int64_t p_max = 0;
  for (std::int64_t p : profits) {
    if (p < 0) throw ParameterError("profits must be nonnegative integers");
    p_max = std::max(p_max, p);
  }
  const std::int64_t top = static_cast<std::int64_t>(kappa) * p_max;
  check_table_budget(static_cast<double>(kappa + 1) * static_cast<double>(top + 1), table_budget,
                     "profit DP");

  ProfitTable table(kappa, top);
  for (int k = 1; k <= kappa; ++k) {
    for (std::int64_t p = 0; p <= top; ++p) {
      // Skipping RB k keeps the prefix value.
      double best = table.min_capacity(k - 1, p);
      int chosen = -1;
      for (int j = 0; j < n; ++j) {
        const auto idx = static_cast<std::size_t>(j) * kappa + (k - 1);
        const std::int64_t pj = profits[idx];
        if (pj > p) continue;
        const double prev = table.min_capacity(k - 1, p - pj);
        if (prev == kInfinity) continue;
        const double c = prev + rate[idx];
        if (c < best) {
          best = c;
          chosen = j;
        }
      }
      table.set(k, p, best, chosen);
    }
  }

  const double capacity = instance.total_capacity();
  std::int64_t profit = top;
  while (profit > 0 && !(table.min_capacity(kappa, profit) <= capacity)) --profit;

  const Instance& inst = instance.instance();
  Allocation alloc(inst);
  std::int64_t p = profit;
  for (int k = kappa; k >= 1; --k) {
    const int j = table.chosen_user(k, p);
    if (j < 0) continue;
    const auto idx = static_cast<std::size_t>(j) * kappa + (k - 1);
    alloc.mutable_assignment().assign(0, k - 1, j);
    alloc.set_rate(inst, 0, j, k - 1, rate[idx]);
    p -= profits[idx];
  }
  SolveResult result = make_result(inst, std::move(alloc),
                                   {{"profit", static_cast<double>(profit)},
                                    {"table_cells", static_cast<double>(kappa + 1) * (top + 1)}});
  return DpProfitResult{std::move(result), std::move(table), profit};
}

DpProfitResult dp_profit(const QuantizedInstance& instance,
                         const std::vector<std::int64_t>& profits, double table_budget) {
  const int n = instance.users();
  const int kappa = instance.rb_count();
  std::vector<double> rate(static_cast<std::size_t>(n) * kappa);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < kappa; ++k) {
      rate[static_cast<std::size_t>(j) * kappa + k] = static_cast<double>(instance.gamma(j, k));
    }
  }
  const SingleCellInstance integer_view = [&] {
    std::vector<std::vector<double>> gamma(n, std::vector<double>(kappa));
    std::vector<double> weight(n);
    for (int j = 0; j < n; ++j) {
      weight[j] = instance.source().weight(j);
      for (int k = 0; k < kappa; ++k) gamma[j][k] = rate[static_cast<std::size_t>(j) * kappa + k];
    }
    return SingleCellInstance(gamma, weight, static_cast<double>(instance.capacity()));
  }();
  DpProfitResult integer = dp_profit_real(integer_view, rate, profits, table_budget);

  // Report rates in source units.
  const Instance& source = instance.source().instance();
  Allocation alloc(source);
  for (const Triple& t : integer.result.allocation.assignment().triples()) {
    alloc.mutable_assignment().assign(0, t.rb, t.user);
    alloc.set_rate(source, 0, t.user, t.rb,
                   static_cast<double>(instance.gamma(t.user, t.rb)) * instance.quantum());
  }
  integer.result = make_result(source, std::move(alloc), integer.result.meta);
  return integer;
}

SolveResult fptas_discrete(const SingleCellInstance& instance, double epsilon,
                           double table_budget) {
  check_epsilon(epsilon);
  const int n = instance.users();
  const int kappa = instance.rb_count();
  const double capacity = instance.total_capacity();
  if (kappa == 1) {
    SolveResult out = best_single_rb(instance);
    out.meta["scale"] = 0.0;
    return out;
  }

  std::vector<double> clamped(static_cast<std::size_t>(n) * kappa);
  double p_max = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < kappa; ++k) {
      const double g = std::min(instance.gamma(j, k), capacity);
      clamped[static_cast<std::size_t>(j) * kappa + k] = g;
      p_max = std::max(p_max, instance.weight(j) * g);
    }
  }
  if (p_max <= 0.0) {
    return make_result(instance.instance(), Allocation(instance.instance()), {{"scale", 0.0}});
  }
  // Each chosen RB loses less than one scaled unit, and at most kappa RBs
  // are chosen, so dividing by kappa bounds the loss by epsilon * p_max.
  const double scale = epsilon * p_max / static_cast<double>(kappa);
  std::vector<std::int64_t> scaled(clamped.size());
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < kappa; ++k) {
      const auto idx = static_cast<std::size_t>(j) * kappa + k;
      scaled[idx] = static_cast<std::int64_t>(std::floor(instance.weight(j) * clamped[idx] / scale));
    }
  }
  DpProfitResult dp = dp_profit_real(instance, clamped, scaled, table_budget);
  dp.result.meta["scale"] = scale;
  dp.result.meta["scaled_profit"] = static_cast<double>(dp.profit);
  dp.result.meta.erase("profit");
  return std::move(dp.result);
}

SolveResult half_approx_almost_discrete(const SingleCellInstance& instance, double epsilon,
                                        double table_budget) {
  SolveResult discrete = fptas_discrete(instance, epsilon, table_budget);
  SolveResult single = best_single_rb(instance);
  const double discrete_value = discrete.objective;
  const double single_value = single.objective;
  const bool use_single = single_value >= discrete_value;
  SolveResult out = use_single ? std::move(single) : std::move(discrete);
  out.meta["discrete_value"] = discrete_value;
  out.meta["single_rb_value"] = single_value;
  out.meta["single_rb_branch"] = use_single ? 1.0 : 0.0;
  return out;
}

double dual_upper_bound(const SingleCellInstance& instance, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be finite and nonnegative");
  }
  double bound = lambda * instance.total_capacity();
  for (int k = 0; k < instance.rb_count(); ++k) {
    double z = 0.0;
    for (int j = 0; j < instance.users(); ++j) {
      const double mu = std::max(0.0, instance.weight(j) - lambda);
      z = std::max(z, instance.gamma(j, k) * mu);
    }
    bound += z;
  }
  return bound;
}

}  // namespace vran::singlecell
