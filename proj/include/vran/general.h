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

// Solvers for the general problem where both C_i and C may bind.
//
// Assignments are sets of (ru, user, rb) triples taking at most one triple
// per (ru, rb) block: the independent sets of a partition matroid. The
// waterfill value f(S) of a set is monotone submodular, so the greedy that
// always adds the best single triple is a 1/2-approximation.

#ifndef VRAN_GENERAL_H_
#define VRAN_GENERAL_H_

#include <cstdint>
#include <set>
#include <vector>

#include "vran/model.h"

namespace vran::general {

class TripleSet {
 public:
  TripleSet() = default;
  // Throws StructuralError if two triples share an (ru, rb) block.
  explicit TripleSet(std::vector<Triple> triples);
  static TripleSet from_assignment(const Assignment& assignment);

  const std::set<Triple>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Triple& t) const { return elements_.count(t) > 0; }
  // True if t's (ru, rb) block is still free.
  bool can_add(const Triple& t) const;
  // Throws StructuralError when the block is taken.
  void add(const Triple& t);
  TripleSet with(const Triple& t) const;

  Assignment to_assignment(const Instance& instance) const;

 private:
  std::set<Triple> elements_;
  std::set<std::pair<int, int>> blocks_;
};

// f(S): waterfill objective of the assignment S describes.
double submodular_value(const Instance& instance, const TripleSet& s);

struct GreedyStep {
  Triple added;
  double gain = 0.0;
};

struct GreedyResult {
  SolveResult result;
  std::vector<GreedyStep> trace;
};

// Adds the max-gain triple until no addition gains more than 1e-12.
GreedyResult matroid_greedy(const Instance& instance);

struct FractionalAllocation {
  std::vector<double> x;  // instance flat tensor layout, each in [0, 1]
  double value = 0.0;     // sum w * gamma * x
  std::int64_t iterations = 0;
  double alpha = 0.0;     // normalizer applied to the accumulated X
};

// Multiplicative-weights packing solver for the fractional relaxation.
// Requires epsilon in (0, 1/2) and every weight > 0 (ParameterError).
// The returned x satisfies all three constraint families.
FractionalAllocation gk_fractional(const Instance& instance, double epsilon);

// Scales C and every finite C_i by `factor`.
Instance shrink_capacities(const Instance& instance, double factor);

inline constexpr double kDefaultShrink = 0.9;

// Samples one user per (ru, rb) with probability x, gives each sampled
// triple the rate gamma (= y/x of the fractional point), then truncates in
// waterfill order to restore capacity feasibility. Deterministic per seed.
// `shrink` is the capacity factor frac was solved with (in (0, 1]).
// Throws StructuralError when a block's probabilities fall outside [0, 1].
SolveResult randomized_round(const Instance& instance, const FractionalAllocation& frac,
                             double shrink, std::uint64_t seed);

// gk_fractional on capacities scaled by `shrink`, then randomized_round
// against the original capacities.
SolveResult gk_rounding(const Instance& instance, double epsilon, double shrink,
                        std::uint64_t seed);

}  // namespace vran::general

#endif  // VRAN_GENERAL_H_
