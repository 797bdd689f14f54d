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

// Dense tableau primal simplex for
//
//   max c'x  s.t.  A x <= b,  x >= 0,  with b >= 0.
//
// The slack basis is feasible, so no phase one is needed. The result is a
// basic feasible solution, which the RB relaxation relies on: it keeps at
// most (rows) variables strictly positive.

#ifndef VRAN_SIMPLEX_H_
#define VRAN_SIMPLEX_H_

#include <vector>

namespace vran {

struct DenseLp {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major rows x cols
  std::vector<double> b;  // rows, all >= 0
  std::vector<double> c;  // cols

  DenseLp(int rows, int cols)
      : rows(rows), cols(cols), a(static_cast<std::size_t>(rows) * cols, 0.0), b(rows, 0.0),
        c(cols, 0.0) {}
  double& at(int r, int col) { return a[static_cast<std::size_t>(r) * cols + col]; }
  double at(int r, int col) const { return a[static_cast<std::size_t>(r) * cols + col]; }
};

struct LpSolution {
  enum class Status { kOptimal, kUnbounded, kIterationLimit };
  Status status = Status::kOptimal;
  std::vector<double> x;     // structural variables
  std::vector<double> dual;  // one per row, >= 0 at optimality
  double objective = 0.0;
  // Basic variable per row: index < cols is structural, cols + r is slack r.
  std::vector<int> basis;
  int pivots = 0;
  bool used_bland = false;
};

struct SimplexOptions {
  double tolerance = 1e-10;
  // Dantzig pricing until this many consecutive degenerate pivots, then
  // Bland's rule for the rest of the solve.
  int degenerate_streak_limit = 50;
  int max_pivots = 0;  // 0: 50 * (rows + cols)
};

LpSolution solve_dense_lp(const DenseLp& lp, const SimplexOptions& options = {});

}  // namespace vran

#endif  // VRAN_SIMPLEX_H_
