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

// Capacity-aware baselines. Both visit (ru, rb) slots in decreasing order of
// max_j w_ij * gamma_ijk and fill until the PON capacity runs out.

#ifndef VRAN_HEURISTICS_H_
#define VRAN_HEURISTICS_H_

#include "vran/model.h"

namespace vran::heuristics {

// Picks argmax_j w_ij * gamma_ijk per slot (PF with capacity tracking).
SolveResult max_yield(const Instance& instance);

// Picks argmax_j w_ij per slot.
SolveResult max_value(const Instance& instance);

}  // namespace vran::heuristics

#endif  // VRAN_HEURISTICS_H_
