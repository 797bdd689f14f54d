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

// vran_cli: solve, oracle, simulate and corpus subcommands.
//
// Exit codes: 0 success, 1 invariant failure, 2 input error, 3 resource
// refusal.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vran/corpus.h"
#include "vran/io.h"
#include "vran/model.h"
#include "vran/sim.h"
#include "vran/solvers.h"

namespace {

constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;
constexpr int kExitRefused = 3;

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

void write_allocation_csv(const std::string& path, const vran::Instance& instance,
                          const vran::SolveResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vran::StructuralError("cannot write " + path);
  out << "ru,user,rb,rate\n";
  for (const vran::Triple& t : result.allocation.assignment().triples()) {
    out << t.ru << ',' << t.user << ',' << t.rb << ','
        << fmt(result.allocation.rate(instance, t.ru, t.user, t.rb), "%.17g") << '\n';
  }
}

int cmd_solve(const std::string& path, const std::string& solver,
              const vran::SolverParams& params, const std::string& out) {
  const vran::Instance instance = vran::load_instance(path);
  const vran::SolveResult result = vran::run_solver(solver, instance, params);
  if (!vran::check_feasible(instance, result.allocation).feasible) {
    std::cerr << "error: " << solver << " returned an infeasible allocation\n";
    return kExitInvariant;
  }
  std::cout << "solver " << solver << '\n' << vran::format_result(instance, result);
  if (!out.empty()) write_allocation_csv(out, instance, result);
  return 0;
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * values.size()));
  return values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
}

int cmd_simulate(const std::string& config_path, std::vector<std::string> solvers,
                 std::string driver, const vran::SolverParams& params, const std::string& out) {
  const vran::sim::SimConfig config = vran::sim::load_config(config_path);
  if (solvers.empty()) solvers.push_back("max-yield");
  if (driver.empty()) driver = solvers.front();
  const vran::sim::EpisodeResult episode = vran::sim::run_episode(config, solvers, driver, params);

  const std::filesystem::path dir = out.empty() ? "." : out;
  std::filesystem::create_directories(dir);
  std::ofstream slots(dir / "slots.csv", std::ios::binary);
  std::ofstream users(dir / "users.csv", std::ios::binary);
  if (!slots || !users) throw vran::StructuralError("cannot write CSV files in " + dir.string());
  vran::sim::write_slot_csv(slots, episode.slots);
  vran::sim::write_user_csv(users, episode.users);

  std::vector<double> rates;
  for (const auto& u : episode.users) rates.push_back(u.avg_rate_bps);
  std::cout << "driver " << driver << ", " << config.measure_slots << " measured slots, "
            << config.user_count << " users\n";
  for (const std::string& s : solvers) {
    double total = 0.0;
    for (const auto& r : episode.slots) {
      if (r.solver == s) total += r.objective;
    }
    std::cout << "  " << s << " mean objective "
              << fmt(config.measure_slots > 0 ? total / config.measure_slots : 0.0) << '\n';
  }
  std::cout << "user rate bps p10 " << fmt(percentile(rates, 0.1)) << " p50 "
            << fmt(percentile(rates, 0.5)) << " p90 " << fmt(percentile(rates, 0.9)) << '\n';
  return 0;
}

int cmd_corpus(const vran::corpus::CorpusOptions& options) {
  const vran::corpus::CorpusReport report = vran::corpus::run_corpus(options);
  std::cout << "instances " << report.instances << '\n';
  std::cout << "max fractional RBs " << report.max_fractional_rbs << '\n';
  for (const auto& [name, ratio] : report.min_ratio) {
    std::cout << "min " << name << ' ' << fmt(ratio, "%.6f") << '\n';
  }
  for (const auto& v : report.violations) std::cout << "VIOLATION " << v << '\n';
  if (!report.ok()) return kExitInvariant;
  std::cout << "all invariants hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-slot vRAN scheduling solvers and simulator"};
  app.require_subcommand(1);

  vran::SolverParams params;
  std::string solver = "max-yield";
  std::vector<std::string> sim_solvers;
  std::string driver;
  std::string out;
  std::string path;
  vran::corpus::CorpusOptions corpus_options;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--quantum", params.quantum, "DP capacity quantum (<= 0: automatic)");
    cmd->add_option("--epsilon", params.epsilon, "Accuracy parameter");
    cmd->add_option("--seed", params.seed, "Random seed");
    cmd->add_option("--shrink", params.shrink, "Capacity shrink factor for rounding");
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("instance", path, "Instance JSON")->required();
  solve->add_option("--solver", solver, "Solver id");
  solve->add_option("--out", out, "Allocation CSV path");
  add_params(solve);

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive optimum of one instance");
  oracle->add_option("instance", path, "Instance JSON")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "Run a multi-slot episode");
  simulate->add_option("config", path, "Simulation config JSON")->required();
  simulate->add_option("--solver", sim_solvers, "Evaluated solver id (repeatable)");
  simulate->add_option("--driver", driver, "Solver whose allocations update R");
  simulate->add_option("--out", out, "Output directory for slots.csv and users.csv");
  add_params(simulate);

  CLI::App* corpus = app.add_subcommand("corpus", "Run the cross-solver checks on random instances");
  corpus->add_option("--size", corpus_options.single_cell, "Single-cell instances");
  corpus->add_option("--two-ru", corpus_options.two_ru, "Two-RU instances");
  corpus->add_option("--seed", corpus_options.seed, "First instance seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve) return cmd_solve(path, solver, params, out);
    if (*oracle) return cmd_solve(path, "oracle", params, "");
    if (*simulate) return cmd_simulate(path, sim_solvers, driver, params, out);
    if (*corpus) return cmd_corpus(corpus_options);
  } catch (const vran::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
