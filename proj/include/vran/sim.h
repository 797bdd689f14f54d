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

// Multi-slot gradient scheduling over a random network.
//
// RUs and users are dropped uniformly on a square, users attach to the
// nearest RU, and every (user, RB) channel fades independently following a
// sum-of-sinusoids Jakes process. Each slot the scheduler maximizes
// sum_ij w_ij sum_k y_ijk with w = 1/max(R, r_floor), and the smoothed
// rates evolve as R <- (1 - beta) R + beta * sum_k y.
//
// Solvers are compared on shared state: one driver solver produces the
// allocations that update R, and every evaluated solver is scored on the
// same per-slot instance.

#ifndef VRAN_SIM_H_
#define VRAN_SIM_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "vran/model.h"
#include "vran/solvers.h"

namespace vran::sim {

struct SimConfig {
  double area_side_m = 1000.0;
  int ru_count = 100;
  int user_count = 1000;
  int rb_per_ru = 25;
  double bandwidth_hz = 2e7;
  double tx_power_dbm = 24.0;
  double noise_figure_db = 9.0;
  double alpha_los = 2.09;
  double alpha_nlos = 3.75;
  double p_los = 0.12;
  double los_cutoff_m = 200.0;
  double doppler_hz = 10.0;
  int jakes_oscillators = 8;
  double slot_s = 1e-3;
  double total_capacity_bps = 1e9;
  double ru_capacity_bps = kInfinity;
  double beta = 0.05;
  double r_floor = 1e3;
  int warmup_slots = 200;
  int measure_slots = 100;
  std::uint64_t seed = 1;

  // Throws ParameterError when a field is out of range.
  void validate() const;
};

// Full-size network: 100 RUs, 1000 users, 25 RBs, 100 measured slots.
SimConfig paper_profile();
// 10 RUs, 100 users, 10 RBs, 50 measured slots; fast enough for DP and
// the greedy on every slot.
SimConfig desk_profile();

// JSON object with an optional "profile" ("paper" or "desk") whose fields
// are then overridden by any SimConfig field present in the document.
SimConfig config_from_json(const nlohmann::json& doc);
SimConfig load_config(const std::string& path);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct SimState {
  std::vector<Point> ru_positions;
  std::vector<Point> user_positions;
  std::vector<int> serving_ru;                // user -> RU
  std::vector<int> local_index;               // user -> position among its RU's users
  std::vector<std::vector<int>> ru_users;     // RU -> users, ascending
  std::vector<std::uint8_t> los;              // ru * user_count + user
  std::vector<double> pathloss;               // user -> linear gain to its RU
  // Oscillator bank per (user, rb, oscillator): Doppler frequency and phase.
  std::vector<double> osc_frequency_hz;
  std::vector<double> osc_phase;
  std::vector<double> smoothed_rate;          // R per user, bps
  int slot = 0;

  bool is_los(int ru, int user) const { return los[static_cast<std::size_t>(ru) * user_positions.size() + user] != 0; }
};

// Deterministic per config.seed. Throws ParameterError on invalid config.
SimState build_network(const SimConfig& config);

// |h|^2 for user's RB at slot t.
double fading_power(const SimConfig& config, const SimState& state, int user, int rb, int t);

// gamma[ru][local user][rb] in bps; users only see their serving RU.
Instance::RateTensor channel_snapshot(const SimConfig& config, const SimState& state, int t);

// Per-slot instance with weights 1/max(R, r_floor).
Instance slot_instance(const SimConfig& config, const SimState& state,
                       const Instance::RateTensor& gamma);

struct SlotRecord {
  int slot = 0;
  std::string solver;
  double objective = 0.0;
};

struct UserRate {
  int user = 0;
  int ru = 0;
  double avg_rate_bps = 0.0;
};

struct EpisodeResult {
  std::vector<SlotRecord> slots;
  std::vector<UserRate> users;
};

// Called after each slot's driver decision, before R is updated.
struct SlotObservation {
  int slot = 0;
  bool measured = false;
  const Instance* instance = nullptr;
  const SolveResult* driver = nullptr;
  const std::vector<double>* smoothed_rate = nullptr;  // R used for this slot's weights
};
using SlotObserver = std::function<void(const SlotObservation&)>;

// Runs warmup + measured slots. The driver is solved every slot and alone
// updates R; evaluated solvers run on measured slots only. Unknown solver
// ids throw UnknownSolver; an infeasible evaluated allocation throws
// std::logic_error.
EpisodeResult run_episode(const SimConfig& config, const std::vector<std::string>& solvers,
                          const std::string& driver, const SolverParams& params = {},
                          const SlotObserver& observer = {});

// slot,solver,objective
void write_slot_csv(std::ostream& out, const std::vector<SlotRecord>& records);
// user,ru,avg_rate_bps
void write_user_csv(std::ostream& out, const std::vector<UserRate>& users);

}  // namespace vran::sim

#endif  // VRAN_SIM_H_
