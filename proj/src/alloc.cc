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

#include "vran/alloc.h"

#include <algorithm>

namespace vran {

Allocation truncate_in_weight_order(const Instance& instance, const Assignment& assignment,
                                    std::span<const double> target) {
  assignment.validate(instance);
  if (target.size() != instance.tensor_size()) {
    throw StructuralError("target tensor size does not match the instance");
  }
  std::vector<Triple> order = assignment.triples();
  // triples() is lexicographic, so a stable sort keeps ties in that order.
  std::stable_sort(order.begin(), order.end(), [&](const Triple& a, const Triple& b) {
    return instance.weight(a.ru, a.user) > instance.weight(b.ru, b.user);
  });

  Allocation out(assignment, std::vector<double>(instance.tensor_size(), 0.0));
  double total_left = instance.total_capacity();
  std::vector<double> ru_left = instance.ru_capacities();
  for (const Triple& t : order) {
    const std::size_t idx = instance.flat_index(t.ru, t.user, t.rb);
    const double want = std::min(target[idx], instance.gamma(t.ru, t.user, t.rb));
    const double y = std::max(0.0, std::min({want, total_left, ru_left[t.ru]}));
    out.mutable_rates()[idx] = y;
    total_left -= y;
    ru_left[t.ru] -= y;
  }
  return out;
}

Allocation waterfill(const Instance& instance, const Assignment& assignment) {
  return truncate_in_weight_order(instance, assignment, instance.flat_gamma());
}

Assignment pf_assignment(const Instance& instance) {
  Assignment x(instance);
  for (int i = 0; i < instance.ru_count(); ++i) {
    for (int k = 0; k < instance.rb_count(); ++k) {
      int best = Assignment::kUnassigned;
      double best_index = 0.0;
      for (int j = 0; j < instance.users(i); ++j) {
        const double index = instance.weight(i, j) * instance.gamma(i, j, k);
        if (index > best_index) {
          best_index = index;
          best = j;
        }
      }
      if (best != Assignment::kUnassigned) x.assign(i, k, best);
    }
  }
  return x;
}

double per_rb_upper_bound(const Instance& instance) {
  double bound = 0.0;
  for (int i = 0; i < instance.ru_count(); ++i) {
    for (int k = 0; k < instance.rb_count(); ++k) {
      double best = 0.0;
      for (int j = 0; j < instance.users(i); ++j) {
        best = std::max(best, instance.weight(i, j) * instance.gamma(i, j, k));
      }
      bound += best;
    }
  }
  return bound;
}

std::optional<Allocation> pf_certificate(const Instance& instance) {
  const Assignment x = pf_assignment(instance);
  Allocation full(x, std::vector<double>(instance.tensor_size(), 0.0));
  for (const Triple& t : x.triples()) {
    full.set_rate(instance, t.ru, t.user, t.rb, instance.gamma(t.ru, t.user, t.rb));
  }
  if (!check_feasible(instance, full).feasible) return std::nullopt;
  return full;
}

}  // namespace vran
