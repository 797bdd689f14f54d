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

#include <gtest/gtest.h>

#include "support.h"

namespace vran {
namespace {

using testing::two_user;

TEST(Waterfill, ThreeSmallRbsAndOneLarge) {
  const Instance inst = two_user().instance();
  Assignment x(inst);
  for (int k = 0; k < 3; ++k) x.assign(0, k, 0);
  x.assign(0, 3, 1);
  const Allocation a = waterfill(inst, x);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(a.rate(inst, 0, 0, k), 1.0);
  EXPECT_EQ(a.rate(inst, 0, 1, 3), 4.0);
  EXPECT_DOUBLE_EQ(objective_of(inst, a), 5.0);
}

TEST(Waterfill, ZeroCapacityGivesZeroRates) {
  const Instance inst = two_user(0.0).instance();
  Assignment x(inst);
  for (int k = 0; k < 4; ++k) x.assign(0, k, k % 2);
  const Allocation a = waterfill(inst, x);
  for (double y : a.rates()) EXPECT_EQ(y, 0.0);
}

TEST(Waterfill, RuCapThenResidualTotal) {
  const Instance inst({{{2}}, {{2}}}, {{2.0}, {1.0}}, {2.0, 2.0}, 3.0);
  Assignment x(inst);
  x.assign(0, 0, 0);
  x.assign(1, 0, 0);
  const Allocation a = waterfill(inst, x);
  EXPECT_DOUBLE_EQ(a.rate(inst, 0, 0, 0), 2.0);
  EXPECT_DOUBLE_EQ(a.rate(inst, 1, 0, 0), 1.0);
  // Grid search over both rates at step 0.01.
  double best = 0.0;
  for (int s = 0; s <= 200; ++s) {
    for (int t = 0; t <= 200; ++t) {
      const double y1 = s * 0.01;
      const double y2 = t * 0.01;
      if (y1 + y2 <= 3.0 + 1e-12) best = std::max(best, 2.0 * y1 + y2);
    }
  }
  EXPECT_NEAR(objective_of(inst, a), best, 1e-9);
}

TEST(Waterfill, EqualWeightsVisitedLexicographically) {
  const Instance inst({{{3, 3}}, {{3, 3}}}, {{1.0}, {1.0}}, {kInfinity, kInfinity}, 4.0);
  Assignment x(inst);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) x.assign(i, k, 0);
  }
  const Allocation a = waterfill(inst, x);
  EXPECT_EQ(a.rate(inst, 0, 0, 0), 3.0);
  EXPECT_EQ(a.rate(inst, 0, 0, 1), 1.0);
  EXPECT_EQ(a.rate(inst, 1, 0, 0), 0.0);
}

TEST(Waterfill, MatchesFixedAssignmentLp) {
  corpus::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_small_instance(rng);
    const Assignment x = testing::random_assignment(inst, rng);
    const Allocation a = waterfill(inst, x);
    ASSERT_TRUE(check_feasible(inst, a).feasible);
    EXPECT_NEAR(objective_of(inst, a), testing::fixed_assignment_lp(inst, x), 1e-6);
  }
}

TEST(Waterfill, ExchangeStable) {
  corpus::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_small_instance(rng);
    const Assignment x = testing::random_assignment(inst, rng);
    EXPECT_EQ(testing::profitable_transfers(inst, x, waterfill(inst, x)), 0) << "trial " << trial;
  }
}

// The scan does flag a deliberately bad allocation.
TEST(Waterfill, ExchangeScanDetectsLightFirstFill) {
  const Instance inst = testing::two_user().instance();
  Assignment x(inst);
  x.assign(0, 0, 0);
  x.assign(0, 1, 1);
  Allocation a(x, std::vector<double>(inst.tensor_size(), 0.0));
  a.set_rate(inst, 0, 0, 0, 0.0);
  a.set_rate(inst, 0, 1, 1, 4.0);
  EXPECT_GT(testing::profitable_transfers(inst, x, a), 0);
}

TEST(PfCertificate, LooseCapacityCertified) {
  const Instance inst = two_user(100.0).instance();
  const std::optional<Allocation> a = pf_certificate(inst);
  ASSERT_TRUE(a.has_value());
  for (int k = 0; k < 4; ++k) EXPECT_EQ(a->assignment().user_at(0, k), 1);
  EXPECT_DOUBLE_EQ(objective_of(inst, *a), 8.0);
  EXPECT_DOUBLE_EQ(per_rb_upper_bound(inst), 8.0);
}

TEST(PfCertificate, BindingCapacityNotCertified) {
  EXPECT_FALSE(pf_certificate(two_user().instance()).has_value());
}

TEST(PfCertificate, AllZeroRates) {
  const Instance inst({{{0, 0}, {0, 0}}}, {{1, 2}}, {kInfinity}, 3.0);
  const std::optional<Allocation> a = pf_certificate(inst);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(objective_of(inst, *a), 0.0);
}

TEST(PfCertificate, ReachesPerRbBoundWhenReturned) {
  corpus::Rng rng(8);
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_small_instance(rng);
    const std::optional<Allocation> a = pf_certificate(inst);
    if (!a) continue;
    ++certified;
    ASSERT_TRUE(check_feasible(inst, *a).feasible);
    EXPECT_NEAR(objective_of(inst, *a), per_rb_upper_bound(inst), 1e-12);
    EXPECT_NEAR(objective_of(inst, *a), brute_force_oracle(inst).objective, 1e-9);
  }
  EXPECT_GT(certified, 10);
}

}  // namespace
}  // namespace vran
