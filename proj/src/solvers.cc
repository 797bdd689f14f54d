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

#include "vran/solvers.h"

#include <algorithm>

#include "vran/general.h"
#include "vran/heuristics.h"
#include "vran/singlecell.h"

namespace vran {

namespace {

// Capacity beyond sum_k max_j gamma_jk can never be used.
SingleCellInstance trim_capacity(const SingleCellInstance& cell) {
  double usable = 0.0;
  for (int k = 0; k < cell.rb_count(); ++k) {
    double best = 0.0;
    for (int j = 0; j < cell.users(); ++j) best = std::max(best, cell.gamma(j, k));
    usable += best;
  }
  if (usable >= cell.total_capacity()) return cell;
  return SingleCellInstance(cell.instance().gamma_tensor()[0], cell.instance().weight_matrix()[0],
                            usable);
}

SolveResult solve_dp(const SingleCellInstance& cell, const SolverParams& params) {
  const SingleCellInstance trimmed = trim_capacity(cell);
  double quantum = params.quantum;
  if (quantum <= 0.0) {
    quantum = trimmed.total_capacity() > 0.0 ? trimmed.total_capacity() / params.dp_levels : 1.0;
  }
  singlecell::DpCapacityResult dp = singlecell::dp_capacity(quantize(trimmed, quantum));
  // Same tensor layout; rates are feasible for the untrimmed capacity.
  return make_result(cell.instance(), std::move(dp.result.allocation), dp.result.meta);
}

SolveResult solve_rounding_ad(const SingleCellInstance& cell, const SolverParams&) {
  return singlecell::rounding_ad(cell);
}

SolveResult solve_fptas(const SingleCellInstance& cell, const SolverParams& params) {
  return singlecell::fptas_discrete(cell, params.epsilon);
}

SolveResult solve_half_approx(const SingleCellInstance& cell, const SolverParams& params) {
  return singlecell::half_approx_almost_discrete(cell, params.epsilon);
}

}  // namespace

const std::vector<std::string>& solver_ids() {
  static const std::vector<std::string> ids = {
      "max-yield", "max-value",      "rounding-ad", "dp",    "fptas",
      "half-approx", "matroid-greedy", "rounding",  "oracle",
  };
  return ids;
}

bool is_solver(const std::string& id) {
  const auto& ids = solver_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SolveResult solve_collapsed(const Instance& instance,
                            SolveResult (*solve)(const SingleCellInstance&, const SolverParams&),
                            const SolverParams& params) {
  if (instance.ru_count() == 1) {
    const SingleCellInstance cell = SingleCellInstance::from_instance(instance);
    SolveResult r = solve(cell, params);
    return make_result(instance, std::move(r.allocation), std::move(r.meta));
  }
  const CollapsedInstance collapsed = collapse_to_single_cell(instance);
  SolveResult r = solve(collapsed.cell, params);
  const Instance& cell = collapsed.cell.instance();
  Allocation out(instance);
  for (const Triple& t : r.allocation.assignment().triples()) {
    const auto [ru, rb] = collapsed.rb_origin[t.rb];
    const auto [user_ru, user] = collapsed.user_origin[t.user];
    const double y = r.allocation.rate(cell, 0, t.user, t.rb);
    // Cross-RU pairs have zero rate and are dropped.
    if (user_ru != ru) continue;
    out.mutable_assignment().assign(ru, rb, user);
    out.set_rate(instance, ru, user, rb, y);
  }
  return make_result(instance, std::move(out), std::move(r.meta));
}

SolveResult run_solver(const std::string& id, const Instance& instance,
                       const SolverParams& params) {
  if (id == "max-yield") return heuristics::max_yield(instance);
  if (id == "max-value") return heuristics::max_value(instance);
  if (id == "rounding-ad") return solve_collapsed(instance, solve_rounding_ad, params);
  if (id == "dp") return solve_collapsed(instance, solve_dp, params);
  if (id == "fptas") return solve_collapsed(instance, solve_fptas, params);
  if (id == "half-approx") return solve_collapsed(instance, solve_half_approx, params);
  if (id == "matroid-greedy") return general::matroid_greedy(instance).result;
  if (id == "rounding") {
    return general::gk_rounding(instance, params.epsilon, params.shrink, params.seed);
  }
  if (id == "oracle") return brute_force_oracle(instance);
  throw UnknownSolver("unknown solver '" + id + "'");
}

}  // namespace vran
