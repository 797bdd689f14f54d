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

#include "vran/sim.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace vran::sim {

namespace {

constexpr double kThermalNoiseDbmPerHz = -174.0;

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

// Uniform [0, 1) from the top 53 bits; identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void SimConfig::validate() const {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw ParameterError(std::string("invalid simulation config: ") + what);
  };
  need(area_side_m > 0.0, "area_side_m must be positive");
  need(ru_count > 0, "ru_count must be positive");
  need(user_count > 0, "user_count must be positive");
  need(rb_per_ru > 0, "rb_per_ru must be positive");
  need(bandwidth_hz > 0.0, "bandwidth_hz must be positive");
  need(alpha_los > 0.0 && alpha_nlos > 0.0, "path-loss exponents must be positive");
  need(p_los >= 0.0 && p_los <= 1.0, "p_los must lie in [0, 1]");
  need(los_cutoff_m >= 0.0, "los_cutoff_m must be nonnegative");
  need(doppler_hz >= 0.0, "doppler_hz must be nonnegative");
  need(jakes_oscillators > 0, "jakes_oscillators must be positive");
  need(slot_s > 0.0, "slot_s must be positive");
  need(total_capacity_bps >= 0.0 && std::isfinite(total_capacity_bps),
       "total_capacity_bps must be finite and nonnegative");
  need(ru_capacity_bps >= 0.0, "ru_capacity_bps must be nonnegative");
  need(beta > 0.0 && beta <= 1.0, "beta must lie in (0, 1]");
  need(r_floor > 0.0, "r_floor must be positive");
  need(warmup_slots >= 0 && measure_slots >= 0, "slot counts must be nonnegative");
}

SimConfig paper_profile() { return SimConfig{}; }

SimConfig desk_profile() {
  SimConfig c;
  c.ru_count = 10;
  c.user_count = 100;
  c.rb_per_ru = 10;
  c.measure_slots = 50;
  return c;
}

SimConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw StructuralError("simulation config must be a JSON object");
  SimConfig c;
  if (doc.contains("profile")) {
    const std::string profile = doc["profile"].get<std::string>();
    if (profile == "desk") {
      c = desk_profile();
    } else if (profile == "paper") {
      c = paper_profile();
    } else {
      throw StructuralError("unknown profile '" + profile + "'");
    }
  }
  try {
    auto read = [&](const char* name, auto& field) {
      if (doc.contains(name)) field = doc[name].get<std::remove_reference_t<decltype(field)>>();
    };
    read("area_side_m", c.area_side_m);
    read("ru_count", c.ru_count);
    read("user_count", c.user_count);
    read("rb_per_ru", c.rb_per_ru);
    read("bandwidth_hz", c.bandwidth_hz);
    read("tx_power_dbm", c.tx_power_dbm);
    read("noise_figure_db", c.noise_figure_db);
    read("alpha_los", c.alpha_los);
    read("alpha_nlos", c.alpha_nlos);
    read("p_los", c.p_los);
    read("los_cutoff_m", c.los_cutoff_m);
    read("doppler_hz", c.doppler_hz);
    read("jakes_oscillators", c.jakes_oscillators);
    read("slot_s", c.slot_s);
    read("total_capacity_bps", c.total_capacity_bps);
    if (doc.contains("ru_capacity_bps")) {
      const auto& v = doc["ru_capacity_bps"];
      c.ru_capacity_bps = v.is_string() && v.get<std::string>() == "inf" ? kInfinity : v.get<double>();
    }
    read("beta", c.beta);
    read("r_floor", c.r_floor);
    read("warmup_slots", c.warmup_slots);
    read("measure_slots", c.measure_slots);
    read("seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("bad simulation config field: ") + e.what());
  }
  return c;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open config file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("cannot parse " + path + ": " + e.what());
  }
  return config_from_json(doc);
}

SimState build_network(const SimConfig& config) {
  config.validate();
  Rng rng(config.seed);
  SimState s;
  auto draw_point = [&] {
    const double x = rng.uniform() * config.area_side_m;
    const double y = rng.uniform() * config.area_side_m;
    return Point{x, y};
  };
  for (int i = 0; i < config.ru_count; ++i) s.ru_positions.push_back(draw_point());
  for (int u = 0; u < config.user_count; ++u) s.user_positions.push_back(draw_point());

  s.ru_users.resize(config.ru_count);
  for (int u = 0; u < config.user_count; ++u) {
    int nearest = 0;
    double best = kInfinity;
    for (int i = 0; i < config.ru_count; ++i) {
      const double d = distance(s.user_positions[u], s.ru_positions[i]);
      if (d < best) {
        best = d;
        nearest = i;
      }
    }
    s.serving_ru.push_back(nearest);
    s.local_index.push_back(static_cast<int>(s.ru_users[nearest].size()));
    s.ru_users[nearest].push_back(u);
  }

  // One draw per pair whether or not it is within the cutoff.
  s.los.resize(static_cast<std::size_t>(config.ru_count) * config.user_count);
  for (int i = 0; i < config.ru_count; ++i) {
    for (int u = 0; u < config.user_count; ++u) {
      const double draw = rng.uniform();
      const double d = distance(s.ru_positions[i], s.user_positions[u]);
      s.los[static_cast<std::size_t>(i) * config.user_count + u] =
          d < config.los_cutoff_m && draw < config.p_los ? 1 : 0;
    }
  }

  for (int u = 0; u < config.user_count; ++u) {
    const int i = s.serving_ru[u];
    const double d = std::max(1.0, distance(s.ru_positions[i], s.user_positions[u]));
    const double alpha = s.is_los(i, u) ? config.alpha_los : config.alpha_nlos;
    s.pathloss.push_back(std::pow(d, -alpha));
  }

  // Random arrival angle and phase per oscillator.
  const std::size_t bank =
      static_cast<std::size_t>(config.user_count) * config.rb_per_ru * config.jakes_oscillators;
  s.osc_frequency_hz.resize(bank);
  s.osc_phase.resize(bank);
  for (std::size_t n = 0; n < bank; ++n) {
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    s.osc_frequency_hz[n] = config.doppler_hz * std::cos(angle);
    s.osc_phase[n] = 2.0 * std::numbers::pi * rng.uniform();
  }
  s.smoothed_rate.assign(config.user_count, 0.0);
  return s;
}

double fading_power(const SimConfig& config, const SimState& state, int user, int rb, int t) {
  const int n_osc = config.jakes_oscillators;
  const std::size_t base =
      (static_cast<std::size_t>(user) * config.rb_per_ru + rb) * static_cast<std::size_t>(n_osc);
  const double time = t * config.slot_s;
  double re = 0.0;
  double im = 0.0;
  for (int n = 0; n < n_osc; ++n) {
    const double arg = 2.0 * std::numbers::pi * state.osc_frequency_hz[base + n] * time +
                       state.osc_phase[base + n];
    re += std::cos(arg);
    im += std::sin(arg);
  }
  return (re * re + im * im) / n_osc;
}

Instance::RateTensor channel_snapshot(const SimConfig& config, const SimState& state, int t) {
  const double rb_bandwidth = config.bandwidth_hz / config.rb_per_ru;
  const double noise = dbm_to_watts(kThermalNoiseDbmPerHz + 10.0 * std::log10(rb_bandwidth) +
                                    config.noise_figure_db);
  const double tx = dbm_to_watts(config.tx_power_dbm);
  Instance::RateTensor gamma(config.ru_count);
  for (int i = 0; i < config.ru_count; ++i) {
    for (int u : state.ru_users[i]) {
      std::vector<double> rates(config.rb_per_ru);
      for (int k = 0; k < config.rb_per_ru; ++k) {
        const double snr = tx * state.pathloss[u] * fading_power(config, state, u, k, t) / noise;
        rates[k] = rb_bandwidth * std::log2(1.0 + snr);
      }
      gamma[i].push_back(std::move(rates));
    }
  }
  return gamma;
}

Instance slot_instance(const SimConfig& config, const SimState& state,
                       const Instance::RateTensor& gamma) {
  std::vector<std::vector<double>> weight(config.ru_count);
  for (int i = 0; i < config.ru_count; ++i) {
    for (int u : state.ru_users[i]) {
      weight[i].push_back(1.0 / std::max(state.smoothed_rate[u], config.r_floor));
    }
  }
  return Instance(gamma, weight, std::vector<double>(config.ru_count, config.ru_capacity_bps),
                  config.total_capacity_bps);
}

EpisodeResult run_episode(const SimConfig& config, const std::vector<std::string>& solvers,
                          const std::string& driver, const SolverParams& params,
                          const SlotObserver& observer) {
  if (!is_solver(driver)) throw UnknownSolver("unknown driver '" + driver + "'");
  for (const auto& s : solvers) {
    if (!is_solver(s)) throw UnknownSolver("unknown solver '" + s + "'");
  }
  SimState state = build_network(config);
  EpisodeResult out;
  std::vector<double> delivered_sum(config.user_count, 0.0);
  const int total_slots = config.warmup_slots + config.measure_slots;

  for (int t = 0; t < total_slots; ++t) {
    state.slot = t;
    const bool measured = t >= config.warmup_slots;
    const Instance instance = slot_instance(config, state, channel_snapshot(config, state, t));
    SolverParams slot_params = params;
    slot_params.seed = params.seed + static_cast<std::uint64_t>(t);
    const SolveResult driven = run_solver(driver, instance, slot_params);

    if (measured) {
      for (const auto& id : solvers) {
        const SolveResult evaluated = id == driver ? driven : run_solver(id, instance, slot_params);
        if (!check_feasible(instance, evaluated.allocation).feasible) {
          throw std::logic_error("solver " + id + " returned an infeasible allocation");
        }
        out.slots.push_back({t - config.warmup_slots, id, evaluated.objective});
      }
    }
    if (observer) observer({t, measured, &instance, &driven, &state.smoothed_rate});

    for (int u = 0; u < config.user_count; ++u) {
      const int i = state.serving_ru[u];
      const int j = state.local_index[u];
      double y = 0.0;
      for (int k = 0; k < config.rb_per_ru; ++k) y += driven.allocation.rate(instance, i, j, k);
      state.smoothed_rate[u] = (1.0 - config.beta) * state.smoothed_rate[u] + config.beta * y;
      if (measured) delivered_sum[u] += y;
    }
  }

  for (int u = 0; u < config.user_count; ++u) {
    const double avg = config.measure_slots > 0 ? delivered_sum[u] / config.measure_slots : 0.0;
    out.users.push_back({u, state.serving_ru[u], avg});
  }
  return out;
}

void write_slot_csv(std::ostream& out, const std::vector<SlotRecord>& records) {
  out << "slot,solver,objective\n";
  for (const auto& r : records) out << r.slot << ',' << r.solver << ',' << format_double(r.objective) << '\n';
}

void write_user_csv(std::ostream& out, const std::vector<UserRate>& users) {
  out << "user,ru,avg_rate_bps\n";
  for (const auto& u : users) out << u.user << ',' << u.ru << ',' << format_double(u.avg_rate_bps) << '\n';
}

}  // namespace vran::sim
