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

// Rate allocation for a fixed RB assignment.

#ifndef VRAN_ALLOC_H_
#define VRAN_ALLOC_H_

#include <optional>
#include <span>

#include "vran/model.h"

namespace vran {

// Optimal rates for a fixed assignment. Assigned triples are visited in
// decreasing weight order (ties: lexicographic (ru, user, rb)) and each gets
// min(gamma, remaining C, remaining C_i).
Allocation waterfill(const Instance& instance, const Assignment& assignment);

// Same visiting order, but each assigned triple asks for target[flat index]
// instead of gamma. Targets above gamma are cut to gamma.
Allocation truncate_in_weight_order(const Instance& instance, const Assignment& assignment,
                                    std::span<const double> target);

// Assigns each (ru, rb) to argmax_j w_ij * gamma_ijk with full rate. Returns
// the allocation only when it respects every capacity, in which case it is
// optimal (it reaches sum_ik max_j w_ij gamma_ijk).
std::optional<Allocation> pf_certificate(const Instance& instance);

// sum_ik max_j w_ij gamma_ijk: no allocation can exceed it.
double per_rb_upper_bound(const Instance& instance);

// The capacity-oblivious PF assignment used by pf_certificate.
Assignment pf_assignment(const Instance& instance);

}  // namespace vran

#endif  // VRAN_ALLOC_H_
