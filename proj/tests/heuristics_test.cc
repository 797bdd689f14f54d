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

#include <gtest/gtest.h>

#include "support.h"
#include "vran/alloc.h"

namespace vran::heuristics {
namespace {

using testing::two_user;

TEST(MaxYield, CapacityTruncatesLargeUser) {
  const SolveResult r = max_yield(two_user().instance());
  EXPECT_DOUBLE_EQ(r.objective, 3.5);
  EXPECT_EQ(r.allocation.assignment().user_at(0, 0), 1);
  EXPECT_EQ(r.allocation.assignment().user_at(0, 1), 1);
}

TEST(MaxYield, LooseCapacityEqualsCertificate) {
  const Instance inst = two_user(100.0).instance();
  EXPECT_DOUBLE_EQ(max_yield(inst).objective, objective_of(inst, *pf_certificate(inst)));
}

TEST(MaxYield, ZeroCapacity) {
  const SolveResult r = max_yield(two_user(0.0).instance());
  EXPECT_EQ(r.objective, 0.0);
  EXPECT_EQ(r.allocation.assignment().assigned_count(), 0);
}

TEST(MaxValue, PicksHeaviestUser) {
  const SolveResult r = max_value(two_user().instance());
  EXPECT_DOUBLE_EQ(r.objective, 4.0);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(r.allocation.assignment().user_at(0, k), 0);
}

TEST(MaxValue, SingleUserMatchesMaxYield) {
  const Instance inst({{{3, 1, 4, 1}}}, {{0.7}}, {kInfinity}, 6.0);
  EXPECT_EQ(max_value(inst).allocation.rates(), max_yield(inst).allocation.rates());
}

TEST(MaxValue, ZeroCapacity) {
  EXPECT_EQ(max_value(two_user(0.0).instance()).objective, 0.0);
}

TEST(Heuristics, RespectRuCapacity) {
  const Instance inst({{{5, 5}}, {{5, 5}}}, {{1.0}, {2.0}}, {3.0, 4.0}, 100.0);
  for (const SolveResult& r : {max_yield(inst), max_value(inst)}) {
    ASSERT_TRUE(check_feasible(inst, r.allocation).feasible);
    EXPECT_DOUBLE_EQ(r.allocation.ru_load(inst, 0), 3.0);
    EXPECT_DOUBLE_EQ(r.allocation.ru_load(inst, 1), 4.0);
  }
}

TEST(Heuristics, BoundedByOracleAndNeitherDominates) {
  corpus::Rng rng(41);
  bool yield_wins = false;
  bool value_wins = false;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_small_instance(rng);
    const double opt = brute_force_oracle(inst).objective;
    const SolveResult y = max_yield(inst);
    const SolveResult v = max_value(inst);
    ASSERT_TRUE(check_feasible(inst, y.allocation).feasible);
    ASSERT_TRUE(check_feasible(inst, v.allocation).feasible);
    EXPECT_GE(y.objective, 0.0);
    EXPECT_GE(v.objective, 0.0);
    EXPECT_LE(y.objective, opt + 1e-9);
    EXPECT_LE(v.objective, opt + 1e-9);
    if (pf_certificate(inst)) EXPECT_NEAR(y.objective, opt, 1e-9);
    yield_wins |= y.objective > v.objective + 1e-9;
    value_wins |= v.objective > y.objective + 1e-9;
  }
  EXPECT_TRUE(yield_wins);
  EXPECT_TRUE(value_wins);
  // The fixed pair: small capacity favors max-value, large favors max-yield.
  EXPECT_GT(max_value(two_user().instance()).objective, max_yield(two_user().instance()).objective);
  EXPECT_GT(max_yield(two_user(100.0).instance()).objective,
            max_value(two_user(100.0).instance()).objective);
}

}  // namespace
}  // namespace vran::heuristics
