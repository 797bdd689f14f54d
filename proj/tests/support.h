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

// Shared fixtures and independent oracles for the test binaries.

#ifndef VRAN_TESTS_SUPPORT_H_
#define VRAN_TESTS_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "vran/corpus.h"
#include "vran/model.h"
#include "vran/simplex.h"

namespace vran::testing {

// 1 RU, user 0 with gamma 1 and weight 1, user 1 with gamma 4 and weight
// 1/2, four RBs, C = 7.
inline SingleCellInstance two_user(double capacity = 7.0) {
  return SingleCellInstance({{1, 1, 1, 1}, {4, 4, 4, 4}}, {1.0, 0.5}, capacity);
}

inline bool near_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// max sum w y over y in [0, gamma] on assigned triples, subject to both
// capacity families, solved as an explicit LP (one column per triple).
inline double fixed_assignment_lp(const Instance& inst, const Assignment& x) {
  const std::vector<Triple> triples = x.triples();
  const int n = static_cast<int>(triples.size());
  if (n == 0) return 0.0;
  std::vector<int> finite_rus;
  for (int i = 0; i < inst.ru_count(); ++i) {
    if (std::isfinite(inst.ru_capacity(i))) finite_rus.push_back(i);
  }
  const int rows = n + static_cast<int>(finite_rus.size()) + 1;
  DenseLp lp(rows, n);
  for (int t = 0; t < n; ++t) {
    const Triple& e = triples[t];
    lp.c[t] = inst.weight(e.ru, e.user);
    lp.at(t, t) = 1.0;
    lp.b[t] = inst.gamma(e.ru, e.user, e.rb);
    for (std::size_t r = 0; r < finite_rus.size(); ++r) {
      if (finite_rus[r] == e.ru) lp.at(n + static_cast<int>(r), t) = 1.0;
    }
    lp.at(rows - 1, t) = 1.0;
  }
  for (std::size_t r = 0; r < finite_rus.size(); ++r) {
    lp.b[n + static_cast<int>(r)] = inst.ru_capacity(finite_rus[r]);
  }
  lp.b[rows - 1] = inst.total_capacity();
  return solve_dense_lp(lp).objective;
}

// Calls visit(assignment) for every assignment of the instance.
inline void for_each_assignment(const Instance& inst,
                                const std::function<void(const Assignment&)>& visit) {
  Assignment x(inst);
  const int slots = inst.ru_count() * inst.rb_count();
  std::function<void(int)> rec = [&](int s) {
    if (s == slots) {
      visit(x);
      return;
    }
    const int i = s / inst.rb_count();
    const int k = s % inst.rb_count();
    x.clear(i, k);
    rec(s + 1);
    for (int j = 0; j < inst.users(i); ++j) {
      x.assign(i, k, j);
      rec(s + 1);
    }
    x.clear(i, k);
  };
  rec(0);
}

// Best sum of profit[j*kappa+k] over assignments whose full rates
// rate[j*kappa+k] fit in C.
inline double discrete_optimum(const SingleCellInstance& cell, const std::vector<double>& rate,
                               const std::vector<double>& profit) {
  double best = 0.0;
  for_each_assignment(cell.instance(), [&](const Assignment& x) {
    double used = 0.0;
    double gain = 0.0;
    for (const Triple& t : x.triples()) {
      const std::size_t idx = static_cast<std::size_t>(t.user) * cell.rb_count() + t.rb;
      used += rate[idx];
      gain += profit[idx];
    }
    if (used <= cell.total_capacity() + 1e-9) best = std::max(best, gain);
  });
  return best;
}

// Random assignment: each slot empty or a uniformly chosen user.
inline Assignment random_assignment(const Instance& inst, corpus::Rng& rng) {
  Assignment x(inst);
  for (int i = 0; i < inst.ru_count(); ++i) {
    for (int k = 0; k < inst.rb_count(); ++k) {
      const int pick = rng.integer(-1, inst.users(i) - 1);
      if (pick >= 0) x.assign(i, k, pick);
    }
  }
  return x;
}

// Random instance with up to two RUs and random (possibly infinite) C_i.
inline Instance random_small_instance(corpus::Rng& rng, int max_rus = 2) {
  const int m = rng.integer(1, max_rus);
  const int kappa = rng.integer(1, 4);
  Instance::RateTensor gamma(m);
  std::vector<std::vector<double>> weight(m);
  std::vector<double> caps;
  for (int i = 0; i < m; ++i) {
    const int n = rng.integer(1, 3);
    for (int j = 0; j < n; ++j) {
      std::vector<double> row;
      for (int k = 0; k < kappa; ++k) row.push_back(rng.uniform() * 6.0);
      gamma[i].push_back(row);
      weight[i].push_back(0.1 + rng.uniform() * 2.0);
    }
    caps.push_back(rng.uniform() < 0.3 ? kInfinity : rng.uniform() * 12.0);
  }
  return Instance(gamma, weight, caps, rng.uniform() * 15.0);
}

// Pairs (heavier a, lighter b) where moving rate from b to a stays feasible
// and gains objective, plus triples that could grow into free capacity.
inline int profitable_transfers(const Instance& inst, const Assignment& x, const Allocation& a) {
  const double tol = 1e-9;
  const double total_slack = inst.total_capacity() - a.total_load();
  int found = 0;
  for (const Triple& hi : x.triples()) {
    const double room = inst.gamma(hi.ru, hi.user, hi.rb) - a.rate(inst, hi.ru, hi.user, hi.rb);
    if (room <= tol || inst.weight(hi.ru, hi.user) <= 0.0) continue;
    const double ru_slack = inst.ru_capacity(hi.ru) - a.ru_load(inst, hi.ru);
    if (ru_slack > tol && total_slack > tol) ++found;
    for (const Triple& lo : x.triples()) {
      if (lo == hi || inst.weight(lo.ru, lo.user) >= inst.weight(hi.ru, hi.user)) continue;
      if (a.rate(inst, lo.ru, lo.user, lo.rb) <= tol) continue;
      // Taking rate from lo frees lo's RU and the total; hi's RU must have
      // room unless both share it.
      if (lo.ru == hi.ru || ru_slack > tol) ++found;
    }
  }
  return found;
}

// Random partition-matroid independent set: each (ru, rb) block is used
// with probability 1/2 by a uniformly chosen user.
inline std::set<Triple> random_independent_triples(const Instance& inst, corpus::Rng& rng) {
  std::set<Triple> s;
  for (int i = 0; i < inst.ru_count(); ++i) {
    for (int k = 0; k < inst.rb_count(); ++k) {
      if (rng.uniform() < 0.5) s.insert({i, rng.integer(0, inst.users(i) - 1), k});
    }
  }
  return s;
}

}  // namespace vran::testing

#endif  // VRAN_TESTS_SUPPORT_H_
