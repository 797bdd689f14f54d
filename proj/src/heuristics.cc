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

#include "vran/heuristics.h"

#include <algorithm>

namespace vran::heuristics {

namespace {

constexpr double kExhausted = 1e-12;

struct Slot {
  int ru;
  int rb;
  double index;  // max_j w_ij * gamma_ijk
};

enum class Pick { kYield, kValue };

SolveResult fill_slots(const Instance& instance, Pick pick) {
  std::vector<Slot> slots;
  for (int i = 0; i < instance.ru_count(); ++i) {
    for (int k = 0; k < instance.rb_count(); ++k) {
      double index = 0.0;
      for (int j = 0; j < instance.users(i); ++j) {
        index = std::max(index, instance.weight(i, j) * instance.gamma(i, j, k));
      }
      slots.push_back({i, k, index});
    }
  }
  // Slots are generated in lexicographic order; stable sort keeps ties there.
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.index > b.index; });

  Allocation alloc(instance);
  double total_left = instance.total_capacity();
  std::vector<double> ru_left = instance.ru_capacities();
  for (const Slot& s : slots) {
    if (total_left < kExhausted) break;
    if (instance.users(s.ru) == 0 || ru_left[s.ru] < kExhausted) continue;
    int best = 0;
    for (int j = 1; j < instance.users(s.ru); ++j) {
      const double cand = pick == Pick::kYield
                              ? instance.weight(s.ru, j) * instance.gamma(s.ru, j, s.rb)
                              : instance.weight(s.ru, j);
      const double incumbent = pick == Pick::kYield
                                   ? instance.weight(s.ru, best) * instance.gamma(s.ru, best, s.rb)
                                   : instance.weight(s.ru, best);
      if (cand > incumbent) best = j;
    }
    const double y = std::min({instance.gamma(s.ru, best, s.rb), total_left, ru_left[s.ru]});
    if (y <= 0.0) continue;
    alloc.mutable_assignment().assign(s.ru, s.rb, best);
    alloc.set_rate(instance, s.ru, best, s.rb, y);
    total_left -= y;
    ru_left[s.ru] -= y;
  }
  return make_result(instance, std::move(alloc));
}

}  // namespace

SolveResult max_yield(const Instance& instance) { return fill_slots(instance, Pick::kYield); }

SolveResult max_value(const Instance& instance) { return fill_slots(instance, Pick::kValue); }

}  // namespace vran::heuristics
