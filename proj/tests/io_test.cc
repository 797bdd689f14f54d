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

#include "vran/io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "support.h"
#include "vran/solvers.h"

namespace vran {
namespace {

TEST(InstanceJson, LoadsTwoUserFixture) {
  const Instance inst = load_instance(VRAN_FIXTURE_DIR "/two_user.json");
  EXPECT_EQ(inst, testing::two_user().instance());
}

TEST(InstanceJson, RoundTripsBitExactly) {
  corpus::Rng rng(123);
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "vran_io_test";
  std::filesystem::create_directories(dir);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = testing::random_small_instance(rng);
    const std::string path = (dir / "inst.json").string();
    save_instance(inst, path);
    EXPECT_EQ(load_instance(path), inst);
    EXPECT_EQ(instance_from_json(nlohmann::json::parse(instance_to_json(inst).dump())), inst);
  }
  std::filesystem::remove_all(dir);
}

TEST(InstanceJson, InfiniteCapacityIsTheStringInf) {
  const nlohmann::json doc = instance_to_json(testing::two_user().instance());
  EXPECT_EQ(doc["ru_capacity"][0], "inf");
  EXPECT_EQ(doc["version"], kInstanceFormatVersion);
}

TEST(InstanceJson, MalformedDocumentsAreStructuralErrors) {
  const char* bad[] = {
      R"([])",
      R"({"ru_capacity": ["inf"], "weight": [[1]], "gamma": [[[1]]]})",
      R"({"ru_capacity": ["big"], "total_capacity": 1, "weight": [[1]], "gamma": [[[1]]]})",
      R"({"ru_capacity": ["inf"], "total_capacity": 1, "weight": [1], "gamma": [[[1]]]})",
      R"({"ru_capacity": ["inf"], "total_capacity": 1, "weight": [[1]], "gamma": [[1]]})",
      R"({"ru_capacity": ["inf"], "total_capacity": "inf", "weight": [[1]], "gamma": [[[1]]]})",
      R"({"version": 2, "ru_capacity": ["inf"], "total_capacity": 1, "weight": [[1]], "gamma": [[[1]]]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(instance_from_json(nlohmann::json::parse(text)), StructuralError) << text;
  }
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), StructuralError);
}

TEST(Solvers, RegistryOnFixture) {
  const Instance inst = testing::two_user().instance();
  SolverParams p;
  p.quantum = 1.0;
  const std::pair<const char*, double> expected[] = {
      {"max-yield", 3.5}, {"max-value", 4.0},      {"rounding-ad", 5.0},
      {"dp", 5.0},        {"matroid-greedy", 4.5}, {"oracle", 5.0},
  };
  for (const auto& [id, value] : expected) {
    EXPECT_NEAR(run_solver(id, inst, p).objective, value, 1e-9) << id;
  }
  EXPECT_THROW(run_solver("simplex", inst, p), UnknownSolver);
}

TEST(Solvers, SingleCellSolversOnMultiRuPonInstance) {
  const Instance inst({{{3, 1}, {1, 2}}, {{2, 5}}}, {{1.0, 2.0}, {0.5}}, {kInfinity, 100.0}, 6.0);
  const double opt = brute_force_oracle(inst).objective;
  SolverParams p;
  p.quantum = 1.0;
  for (const char* id : {"rounding-ad", "dp", "fptas", "half-approx"}) {
    const SolveResult r = run_solver(id, inst, p);
    ASSERT_TRUE(check_feasible(inst, r.allocation).feasible) << id;
    EXPECT_LE(r.objective, opt + 1e-9);
  }
  EXPECT_NEAR(run_solver("dp", inst, p).objective, opt, 1e-9);
  const Instance binding({{{3}}, {{2}}}, {{1.0}, {1.0}}, {1.0, kInfinity}, 6.0);
  EXPECT_THROW(run_solver("dp", binding, p), StructuralError);
}

}  // namespace
}  // namespace vran
