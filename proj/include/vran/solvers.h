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

// Named solver registry shared by the simulator and the command line.
//
// Single-cell solvers (rounding-ad, dp, fptas, half-approx) accept any
// instance whose RU capacities cannot bind; multi-RU instances are
// flattened with collapse_to_single_cell and the answer mapped back.

#ifndef VRAN_SOLVERS_H_
#define VRAN_SOLVERS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vran/model.h"

namespace vran {

struct SolverParams {
  // DP quantum in capacity units; <= 0 picks capacity / dp_levels.
  double quantum = 0.0;
  double dp_levels = 10000.0;
  double epsilon = 0.1;
  double shrink = 0.9;
  std::uint64_t seed = 1;
};

class UnknownSolver : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

const std::vector<std::string>& solver_ids();
bool is_solver(const std::string& id);

// Throws UnknownSolver, StructuralError (single-cell solver on an instance
// with binding RU capacities), ParameterError or BudgetExceeded.
SolveResult run_solver(const std::string& id, const Instance& instance,
                       const SolverParams& params = {});

// Solves the flattened single-cell view and maps the allocation back.
SolveResult solve_collapsed(const Instance& instance,
                            SolveResult (*solve)(const SingleCellInstance&, const SolverParams&),
                            const SolverParams& params);

}  // namespace vran

#endif  // VRAN_SOLVERS_H_
