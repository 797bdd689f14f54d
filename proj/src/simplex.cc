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

#include "vran/simplex.h"

#include <cmath>
#include <stdexcept>

namespace vran {

namespace {

// Tableau with rows [A | I | b] and a cost row holding z_j - c_j.
class Tableau {
 public:
  explicit Tableau(const DenseLp& lp)
      : rows_(lp.rows),
        width_(lp.cols + lp.rows + 1),
        structural_(lp.cols),
        cells_(static_cast<std::size_t>(lp.rows + 1) * width_, 0.0),
        basis_(lp.rows) {
    for (int r = 0; r < rows_; ++r) {
      if (!(lp.b[r] >= 0.0)) throw std::invalid_argument("simplex needs b >= 0");
      for (int c = 0; c < lp.cols; ++c) at(r, c) = lp.at(r, c);
      at(r, lp.cols + r) = 1.0;
      at(r, rhs()) = lp.b[r];
      basis_[r] = lp.cols + r;
    }
    for (int c = 0; c < lp.cols; ++c) at(rows_, c) = -lp.c[c];
  }

  double& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * width_ + c]; }
  double at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * width_ + c]; }
  int rhs() const { return width_ - 1; }
  int columns() const { return width_ - 1; }
  int rows() const { return rows_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    double* prow = &at(pr, 0);
    for (int c = 0; c < width_; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &at(r, 0);
      const double factor = row[pc];
      if (factor == 0.0) continue;
      for (int c = 0; c < width_; ++c) row[c] -= factor * prow[c];
      row[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

 private:
  int rows_;
  int width_;
  int structural_;
  std::vector<double> cells_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution solve_dense_lp(const DenseLp& lp, const SimplexOptions& options) {
  if (static_cast<int>(lp.b.size()) != lp.rows || static_cast<int>(lp.c.size()) != lp.cols ||
      lp.a.size() != static_cast<std::size_t>(lp.rows) * lp.cols) {
    throw std::invalid_argument("inconsistent LP dimensions");
  }
  Tableau t(lp);
  const double tol = options.tolerance;
  const int max_pivots = options.max_pivots > 0 ? options.max_pivots : 50 * (lp.rows + lp.cols);

  LpSolution out;
  bool bland = false;
  int degenerate_streak = 0;
  while (true) {
    // Pricing.
    int enter = -1;
    double most_negative = -tol;
    for (int c = 0; c < t.columns(); ++c) {
      const double d = t.at(t.rows(), c);
      if (d < -tol) {
        if (bland) {
          enter = c;
          break;
        }
        if (d < most_negative) {
          most_negative = d;
          enter = c;
        }
      }
    }
    if (enter < 0) break;

    // Ratio test; ties go to the smallest basic variable index.
    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= tol) continue;
      const double ratio = t.at(r, t.rhs()) / a;
      if (leave < 0 || ratio < best_ratio - tol ||
          (ratio <= best_ratio + tol && t.basis()[r] < t.basis()[leave])) {
        if (leave < 0 || ratio < best_ratio - tol) best_ratio = ratio;
        leave = r;
      }
    }
    if (leave < 0) {
      out.status = LpSolution::Status::kUnbounded;
      break;
    }
    if (out.pivots >= max_pivots) {
      out.status = LpSolution::Status::kIterationLimit;
      break;
    }
    degenerate_streak = best_ratio <= tol ? degenerate_streak + 1 : 0;
    if (!bland && degenerate_streak >= options.degenerate_streak_limit) bland = true;
    t.pivot(leave, enter);
    // Clean round-off that would make the basis infeasible.
    for (int r = 0; r < t.rows(); ++r) {
      if (t.at(r, t.rhs()) < 0.0 && t.at(r, t.rhs()) > -1e-12) t.at(r, t.rhs()) = 0.0;
    }
    ++out.pivots;
  }

  out.used_bland = bland;
  out.x.assign(lp.cols, 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    const int var = t.basis()[r];
    if (var < lp.cols) out.x[var] = std::max(0.0, t.at(r, t.rhs()));
  }
  out.dual.resize(lp.rows);
  for (int r = 0; r < lp.rows; ++r) out.dual[r] = t.at(t.rows(), lp.cols + r);
  out.objective = 0.0;
  for (int c = 0; c < lp.cols; ++c) out.objective += lp.c[c] * out.x[c];
  out.basis = t.basis();
  return out;
}

}  // namespace vran
