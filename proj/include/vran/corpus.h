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

// Small random integer instances and the cross-solver checks run on them.

#ifndef VRAN_CORPUS_H_
#define VRAN_CORPUS_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vran/model.h"

namespace vran::corpus {

// Portable draws from mt19937_64 (the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Inclusive range.
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

struct SingleCellLimits {
  int max_users = 3;
  int max_rbs = 4;
  int max_gamma = 6;
  int max_capacity = 12;
  int max_weight = 9;
};

// One RU, integer gamma in [0, max_gamma], integer weights in
// [1, max_weight], C in [0, max_capacity], infinite C_0.
SingleCellInstance random_single_cell(std::uint64_t seed, const SingleCellLimits& limits = {});

struct TwoRuLimits {
  int max_users = 2;
  int max_rbs = 3;
  int max_gamma = 6;
  int max_weight = 9;
};

// Two RUs whose C_i are each below what the RU could carry and whose C is
// below sum_i C_i, so both capacity families bind.
Instance random_two_ru(std::uint64_t seed, const TwoRuLimits& limits = {});

struct CorpusOptions {
  int single_cell = 200;
  int two_ru = 150;
  std::uint64_t seed = 1;
};

struct CorpusReport {
  int instances = 0;
  std::vector<std::string> violations;  // each names the instance seed
  std::map<std::string, double> min_ratio;
  int max_fractional_rbs = 0;

  bool ok() const { return violations.empty(); }
};

// Single-cell instance seeds are seed, seed+1, ...; two-RU seeds continue
// after them. Checks oracle equivalence, vertex structure, approximation
// ratios, duality, the fractional solver band and feasibility of every
// solver output.
CorpusReport run_corpus(const CorpusOptions& options);

}  // namespace vran::corpus

#endif  // VRAN_CORPUS_H_
