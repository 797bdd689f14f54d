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

// Runs the command-line binary and checks exit codes and outputs.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(VRAN_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(VRAN_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(Cli, SolveDpWithUnitQuantum) {
  const CliRun r = run("solve " + fixture("two_user.json") + " --solver dp --quantum 1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("objective 5\n"), std::string::npos) << r.out;
}

TEST(Cli, SolveMaxYield) {
  const CliRun r = run("solve " + fixture("two_user.json") + " --solver max-yield");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objective 3.5\n"), std::string::npos) << r.out;
}

TEST(Cli, SolveMatroidGreedy) {
  const CliRun r = run("solve " + fixture("two_user.json") + " --solver matroid-greedy");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objective 4.5\n"), std::string::npos) << r.out;
}

TEST(Cli, SolveWritesAllocationCsv) {
  TempDir dir("vran_cli_solve");
  const std::string csv = (dir.path() / "alloc.csv").string();
  ASSERT_EQ(run("solve " + fixture("two_user.json") + " --solver rounding-ad --out " + csv).code, 0);
  EXPECT_EQ(slurp(csv), "ru,user,rb,rate\n0,0,0,1\n0,0,2,1\n0,0,3,1\n0,1,1,4\n");
}

TEST(Cli, OracleOutputs) {
  CliRun r = run("oracle " + fixture("two_user.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objective 5\n"), std::string::npos);
  r = run("oracle " + fixture("zero_capacity.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objective 0\n"), std::string::npos);
}

TEST(Cli, OracleRefusesOversizedInstance) {
  TempDir dir("vran_cli_big");
  // Nine users on eight RBs: 10^8 assignments.
  std::ofstream out(dir.path() / "big.json");
  out << R"({"ru_capacity": ["inf"], "total_capacity": 5, "weight": [[1,1,1,1,1,1,1,1,1]], "gamma": [[)";
  for (int j = 0; j < 9; ++j) out << (j ? "," : "") << "[1,1,1,1,1,1,1,1]";
  out << "]]}";
  out.close();
  const CliRun r = run("oracle " + (dir.path() / "big.json").string());
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find("100000000"), std::string::npos) << r.out;
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("solve /nonexistent.json").code, 2);
  EXPECT_EQ(run("solve " + fixture("two_user.json") + " --solver nope").code, 2);
  EXPECT_EQ(run("solve " + fixture("two_user.json") + " --epsilon 0 --solver fptas").code, 2);
  EXPECT_EQ(run("solve").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("simulate /nonexistent.json").code, 2);
}

TEST(Cli, CorpusDefaultPasses) {
  const CliRun r = run("corpus");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all invariants hold"), std::string::npos);
  EXPECT_NE(r.out.find("min rounding_ad/oracle"), std::string::npos);
}

TEST(Cli, EmptyCorpusIsVacuous) {
  const CliRun r = run("corpus --size 0 --two-ru 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("instances 0\n"), std::string::npos);
}

TEST(Cli, SimulateIsByteDeterministic) {
  TempDir dir("vran_cli_sim");
  const std::string config = (dir.path() / "cfg.json").string();
  std::ofstream(config) << R"({"profile": "desk", "ru_count": 4, "user_count": 20, "warmup_slots": 10, "measure_slots": 10})";
  const std::string args = "simulate " + config + " --solver max-yield --solver dp --driver max-yield --out ";
  ASSERT_EQ(run(args + (dir.path() / "a").string()).code, 0);
  ASSERT_EQ(run(args + (dir.path() / "b").string()).code, 0);
  EXPECT_EQ(slurp(dir.path() / "a" / "slots.csv"), slurp(dir.path() / "b" / "slots.csv"));
  EXPECT_EQ(slurp(dir.path() / "a" / "users.csv"), slurp(dir.path() / "b" / "users.csv"));
  EXPECT_EQ(slurp(dir.path() / "a" / "users.csv").rfind("user,ru,avg_rate_bps\n", 0), 0u);
}

}  // namespace
