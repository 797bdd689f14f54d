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

#include "vran/general.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "vran/alloc.h"

namespace vran::general {

TripleSet::TripleSet(std::vector<Triple> triples) {
  for (const Triple& t : triples) add(t);
}

TripleSet TripleSet::from_assignment(const Assignment& assignment) {
  return TripleSet(assignment.triples());
}

bool TripleSet::can_add(const Triple& t) const { return blocks_.count({t.ru, t.rb}) == 0; }

void TripleSet::add(const Triple& t) {
  if (!can_add(t)) throw StructuralError("triple set would hold two users on one RB");
  elements_.insert(t);
  blocks_.insert({t.ru, t.rb});
}

TripleSet TripleSet::with(const Triple& t) const {
  TripleSet out = *this;
  out.add(t);
  return out;
}

Assignment TripleSet::to_assignment(const Instance& instance) const {
  Assignment x(instance);
  for (const Triple& t : elements_) x.assign(t.ru, t.rb, t.user);
  x.validate(instance);
  return x;
}

double submodular_value(const Instance& instance, const TripleSet& s) {
  const Allocation a = waterfill(instance, s.to_assignment(instance));
  return weighted_sum(instance, a.rates());
}

GreedyResult matroid_greedy(const Instance& instance) {
  constexpr double kMinGain = 1e-12;
  std::vector<Triple> ground;
  for (int i = 0; i < instance.ru_count(); ++i) {
    for (int j = 0; j < instance.users(i); ++j) {
      for (int k = 0; k < instance.rb_count(); ++k) {
        if (instance.gamma(i, j, k) > 0.0 && instance.weight(i, j) > 0.0) {
          ground.push_back({i, j, k});
        }
      }
    }
  }

  GreedyResult out{make_result(instance, Allocation(instance)), {}};
  Assignment x(instance);
  double current = 0.0;
  std::int64_t evaluations = 0;
  while (true) {
    double best_value = current;
    const Triple* best = nullptr;
    for (const Triple& t : ground) {
      if (x.assigned(t.ru, t.rb)) continue;
      x.assign(t.ru, t.rb, t.user);
      const double value = weighted_sum(instance, waterfill(instance, x).rates());
      x.clear(t.ru, t.rb);
      ++evaluations;
      if (value > best_value) {
        best_value = value;
        best = &t;
      }
    }
    if (best == nullptr || best_value - current <= kMinGain) break;
    x.assign(best->ru, best->rb, best->user);
    out.trace.push_back({*best, best_value - current});
    current = best_value;
  }
  out.result = make_result(instance, waterfill(instance, x),
                           {{"iterations", static_cast<double>(out.trace.size())},
                            {"evaluations", static_cast<double>(evaluations)}});
  return out;
}

FractionalAllocation gk_fractional(const Instance& instance, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw ParameterError("epsilon must lie in (0, 1/2)");
  for (double w : instance.flat_weight()) {
    if (!(w > 0.0)) throw ParameterError("fractional solver needs every weight > 0");
  }
  const int m = instance.ru_count();
  const int kappa = instance.rb_count();
  const double total_cap = instance.total_capacity();

  FractionalAllocation out;
  out.x.assign(instance.tensor_size(), 0.0);

  struct Candidate {
    Triple t;
    std::size_t idx;
    double gamma;
    double weight;
    double step;  // largest increment keeping every load increase <= 1
  };
  std::vector<Candidate> candidates;
  for (int i = 0; i < m; ++i) {
    const double cap_i = instance.ru_capacity(i);
    if (cap_i <= 0.0) continue;
    for (int j = 0; j < instance.users(i); ++j) {
      for (int k = 0; k < kappa; ++k) {
        const double g = instance.gamma(i, j, k);
        if (g <= 0.0 || total_cap <= 0.0) continue;
        const double step = std::min({1.0, cap_i / g, total_cap / g});
        candidates.push_back({{i, j, k}, instance.flat_index(i, j, k), g, instance.weight(i, j), step});
      }
    }
  }
  if (candidates.empty()) return out;

  // Packing rows: one per RB slot, one per finite C_i, one for C.
  std::vector<bool> rb_used(static_cast<std::size_t>(m) * kappa, false);
  std::vector<bool> ru_used(m, false);
  for (const Candidate& c : candidates) {
    rb_used[static_cast<std::size_t>(c.t.ru) * kappa + c.t.rb] = true;
    if (std::isfinite(instance.ru_capacity(c.t.ru))) ru_used[c.t.ru] = true;
  }
  const auto rows = static_cast<double>(std::count(rb_used.begin(), rb_used.end(), true) +
                                        std::count(ru_used.begin(), ru_used.end(), true) + 1);
  // With loads growing by at most 1 per step, reaching max load
  // ln(rows)/eps^2 leaves the normalized point within 1 - 1.5 eps of optimal.
  const double target = std::log(rows) / (epsilon * epsilon);
  const auto max_iterations = static_cast<std::int64_t>(rows * (std::ceil(target) + 1.0));

  std::vector<double> u(static_cast<std::size_t>(m) * kappa, 1.0);
  std::vector<double> v(m, 0.0);
  for (int i = 0; i < m; ++i) {
    if (std::isfinite(instance.ru_capacity(i))) v[i] = 1.0 / instance.ru_capacity(i);
  }
  double w_total = 1.0 / total_cap;

  std::vector<double> accumulated(instance.tensor_size(), 0.0);
  std::vector<double> rb_load(u.size(), 0.0);
  std::vector<double> ru_load(m, 0.0);
  double total_load = 0.0;
  double alpha = 0.0;

  while (alpha < target && out.iterations < max_iterations) {
    // Cheapest column per unit of profit.
    const Candidate* best = nullptr;
    double best_ratio = kInfinity;
    for (const Candidate& c : candidates) {
      const std::size_t slot = static_cast<std::size_t>(c.t.ru) * kappa + c.t.rb;
      const double cost = u[slot] + c.gamma * (v[c.t.ru] + w_total);
      const double ratio = cost / (c.weight * c.gamma);
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best = &c;
      }
    }
    const Candidate& c = *best;
    const std::size_t slot = static_cast<std::size_t>(c.t.ru) * kappa + c.t.rb;
    const double delta = c.step;
    accumulated[c.idx] += delta;

    rb_load[slot] += delta;
    u[slot] *= 1.0 + epsilon * delta;
    alpha = std::max(alpha, rb_load[slot]);
    if (std::isfinite(instance.ru_capacity(c.t.ru))) {
      const double load = delta * c.gamma / instance.ru_capacity(c.t.ru);
      ru_load[c.t.ru] += load;
      v[c.t.ru] *= 1.0 + epsilon * load;
      alpha = std::max(alpha, ru_load[c.t.ru]);
    }
    const double load = delta * c.gamma / total_cap;
    total_load += load;
    w_total *= 1.0 + epsilon * load;
    alpha = std::max(alpha, total_load);
    ++out.iterations;

    // Only ratios of duals matter; rescale before they overflow.
    if (w_total > 1e200 || u[slot] > 1e200 || v[c.t.ru] > 1e200) {
      for (double& d : u) d *= 1e-200;
      for (double& d : v) d *= 1e-200;
      w_total *= 1e-200;
    }
  }

  out.alpha = alpha;
  for (const Candidate& c : candidates) {
    const double x = alpha > 0.0 ? std::min(1.0, accumulated[c.idx] / alpha) : 0.0;
    out.x[c.idx] = x;
    out.value += c.weight * c.gamma * x;
  }
  return out;
}

Instance shrink_capacities(const Instance& instance, double factor) {
  std::vector<double> caps = instance.ru_capacities();
  for (double& c : caps) {
    if (std::isfinite(c)) c *= factor;
  }
  return Instance(instance.gamma_tensor(), instance.weight_matrix(), std::move(caps),
                  instance.total_capacity() * factor);
}

SolveResult randomized_round(const Instance& instance, const FractionalAllocation& frac,
                             double shrink, std::uint64_t seed) {
  constexpr double kSlack = 1e-9;
  if (!(shrink > 0.0 && shrink <= 1.0)) throw ParameterError("shrink must lie in (0, 1]");
  if (frac.x.size() != instance.tensor_size()) {
    throw StructuralError("fractional point does not match the instance");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  Assignment x(instance);
  std::int64_t draws = 0;
  for (int i = 0; i < instance.ru_count(); ++i) {
    for (int k = 0; k < instance.rb_count(); ++k) {
      double mass = 0.0;
      int certain = Assignment::kUnassigned;
      for (int j = 0; j < instance.users(i); ++j) {
        const double p = frac.x[instance.flat_index(i, j, k)];
        if (p < -kSlack || p > 1.0 + kSlack || std::isnan(p)) {
          throw StructuralError("fractional assignment is not a probability");
        }
        if (p >= 1.0 - 1e-12) certain = j;
        mass += std::max(0.0, p);
      }
      if (mass > 1.0 + kSlack) throw StructuralError("RB probabilities sum above 1");
      if (certain != Assignment::kUnassigned) {
        x.assign(i, k, certain);
        continue;
      }
      if (mass <= 1e-12) continue;
      const double draw = uniform();
      ++draws;
      double cumulative = 0.0;
      for (int j = 0; j < instance.users(i); ++j) {
        cumulative += std::max(0.0, frac.x[instance.flat_index(i, j, k)]);
        if (draw < cumulative) {
          x.assign(i, k, j);
          break;
        }
      }
    }
  }
  // Sampled triples ask for y/x = gamma; truncation restores feasibility.
  double sampled_value = 0.0;
  for (const Triple& t : x.triples()) {
    sampled_value += instance.weight(t.ru, t.user) * instance.gamma(t.ru, t.user, t.rb);
  }
  return make_result(instance, truncate_in_weight_order(instance, x, instance.flat_gamma()),
                     {{"draws", static_cast<double>(draws)},
                      {"shrink", shrink},
                      {"fractional_value", frac.value},
                      {"sampled_value", sampled_value}});
}

SolveResult gk_rounding(const Instance& instance, double epsilon, double shrink,
                        std::uint64_t seed) {
  if (!(shrink > 0.0 && shrink <= 1.0)) throw ParameterError("shrink must lie in (0, 1]");
  const FractionalAllocation frac = gk_fractional(shrink_capacities(instance, shrink), epsilon);
  SolveResult out = randomized_round(instance, frac, shrink, seed);
  out.meta["iterations"] = static_cast<double>(frac.iterations);
  return out;
}

}  // namespace vran::general
