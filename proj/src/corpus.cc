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

#include "vran/corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>

#include "vran/general.h"
#include "vran/heuristics.h"
#include "vran/singlecell.h"

namespace vran::corpus {

namespace {

constexpr double kTol = 1e-9;

class Checker {
 public:
  explicit Checker(CorpusReport& report) : report_(report) {}

  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    report_.violations.push_back("seed " + std::to_string(seed_) + ": " + what);
  }

  // value >= factor * reference, recording value/reference.
  void ratio(const std::string& name, double value, double reference, double factor) {
    expect(value >= factor * reference - kTol * std::max(1.0, reference),
           name + " = " + fmt(value) + " below " + fmt(factor) + " x " + fmt(reference));
    if (reference > kTol) {
      auto [it, inserted] = report_.min_ratio.emplace(name, value / reference);
      if (!inserted) it->second = std::min(it->second, value / reference);
    }
  }

  void feasible(const std::string& solver, const Instance& instance, const SolveResult& r) {
    const FeasibilityReport f = check_feasible(instance, r.allocation);
    expect(f.feasible, solver + " returned an infeasible allocation");
    expect(std::abs(weighted_sum(instance, r.allocation.rates()) - r.objective) <=
               kTol * std::max(1.0, r.objective),
           solver + " objective does not match its allocation");
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
  }

 private:
  CorpusReport& report_;
  std::uint64_t seed_ = 0;
};

double usable_rate(const Instance& instance, int ru) {
  double total = 0.0;
  for (int k = 0; k < instance.rb_count(); ++k) {
    double best = 0.0;
    for (int j = 0; j < instance.users(ru); ++j) best = std::max(best, instance.gamma(ru, j, k));
    total += best;
  }
  return total;
}

void check_single_cell(const SingleCellInstance& cell, Checker& c, CorpusReport& report,
                       Rng& rng) {
  const Instance& inst = cell.instance();
  const SolveResult oracle = brute_force_oracle(inst);
  c.feasible("oracle", inst, oracle);

  const auto dp = singlecell::dp_capacity(quantize(cell, 1.0));
  c.feasible("dp_capacity", inst, dp.result);
  c.expect(std::abs(dp.result.objective - oracle.objective) <= kTol * std::max(1.0, oracle.objective),
           "dp_capacity " + Checker::fmt(dp.result.objective) + " != oracle " +
               Checker::fmt(oracle.objective));

  const auto lp = singlecell::solve_rlp(cell);
  const int fractional = static_cast<int>(lp.fractional_rbs.size());
  report.max_fractional_rbs = std::max(report.max_fractional_rbs, fractional);
  c.expect(fractional <= 1, "LP vertex has " + std::to_string(fractional) + " fractional RBs");
  c.expect(lp.lp_value >= oracle.objective - kTol * std::max(1.0, oracle.objective),
           "LP value below the integral optimum");

  const SolveResult rad = singlecell::rounding_ad(cell);
  c.feasible("rounding_ad", inst, rad);
  c.ratio("rounding_ad/oracle", rad.objective, oracle.objective, 0.5);
  c.ratio("rounding_ad/lp", rad.objective, lp.lp_value, 0.5);

  for (double eps : {0.1, 0.25}) {
    const SolveResult half = singlecell::half_approx_almost_discrete(cell, eps);
    c.feasible("half_approx", inst, half);
    c.ratio("half_approx(" + Checker::fmt(eps) + ")/oracle", half.objective, oracle.objective,
            0.5 - eps);
  }

  // Best discrete solution with exact integer profits w * min(gamma, C).
  std::vector<double> rate;
  std::vector<std::int64_t> profit;
  for (int j = 0; j < cell.users(); ++j) {
    for (int k = 0; k < cell.rb_count(); ++k) {
      const double r = std::min(cell.gamma(j, k), cell.total_capacity());
      rate.push_back(r);
      profit.push_back(std::llround(cell.weight(j) * r));
    }
  }
  const auto discrete = singlecell::dp_profit_real(cell, rate, profit);
  for (double eps : {0.1, 0.3}) {
    const SolveResult f = singlecell::fptas_discrete(cell, eps);
    c.feasible("fptas", inst, f);
    c.ratio("fptas(" + Checker::fmt(eps) + ")/dp_profit", f.objective,
            discrete.result.objective, 1.0 - eps);
  }

  double max_w = 0.0;
  for (int j = 0; j < cell.users(); ++j) max_w = std::max(max_w, cell.weight(j));
  for (int s = 0; s < 20; ++s) {
    const double lambda = s == 0 ? 0.0 : rng.uniform() * 2.0 * max_w;
    const double bound = singlecell::dual_upper_bound(cell, lambda);
    c.expect(bound >= lp.lp_value - 1e-9 * std::max(1.0, lp.lp_value),
             "dual bound at lambda " + Checker::fmt(lambda) + " below LP value");
  }

  const auto gk = general::gk_fractional(inst, 0.05);
  c.expect(gk.value >= (1.0 - 2 * 0.05) * lp.lp_value - kTol && gk.value <= lp.lp_value + 1e-6,
           "gk_fractional " + Checker::fmt(gk.value) + " outside band of LP " +
               Checker::fmt(lp.lp_value));

  for (const auto& [name, r] :
       {std::pair{"max_yield", heuristics::max_yield(inst)},
        std::pair{"max_value", heuristics::max_value(inst)},
        std::pair{"matroid_greedy", general::matroid_greedy(inst).result}}) {
    c.feasible(name, inst, r);
    c.expect(r.objective <= oracle.objective + kTol * std::max(1.0, oracle.objective),
             std::string(name) + " exceeds the oracle");
  }
  c.ratio("matroid_greedy/oracle", general::matroid_greedy(inst).result.objective,
          oracle.objective, 0.5);
}

void check_two_ru(const Instance& inst, std::uint64_t seed, Checker& c) {
  const SolveResult oracle = brute_force_oracle(inst);
  c.feasible("oracle", inst, oracle);
  const SolveResult greedy = general::matroid_greedy(inst).result;
  c.feasible("matroid_greedy", inst, greedy);
  c.ratio("matroid_greedy/oracle (two RU)", greedy.objective, oracle.objective, 0.5);
  const SolveResult rounded = general::gk_rounding(inst, 0.1, general::kDefaultShrink, seed);
  c.feasible("rounding", inst, rounded);
  for (const auto& [name, r] : {std::pair{"max_yield", heuristics::max_yield(inst)},
                                std::pair{"max_value", heuristics::max_value(inst)},
                                std::pair{"rounding", rounded}, std::pair{"greedy", greedy}}) {
    c.feasible(name, inst, r);
    c.expect(r.objective <= oracle.objective + kTol * std::max(1.0, oracle.objective),
             std::string(name) + " exceeds the oracle");
  }
}

}  // namespace

SingleCellInstance random_single_cell(std::uint64_t seed, const SingleCellLimits& limits) {
  Rng rng(seed);
  const int n = rng.integer(1, limits.max_users);
  const int kappa = rng.integer(1, limits.max_rbs);
  std::vector<std::vector<double>> gamma(n, std::vector<double>(kappa));
  std::vector<double> weight(n);
  for (auto& row : gamma) {
    for (double& g : row) g = rng.integer(0, limits.max_gamma);
  }
  for (double& w : weight) w = rng.integer(1, limits.max_weight);
  const double capacity = rng.integer(0, limits.max_capacity);
  return SingleCellInstance(gamma, weight, capacity);
}

Instance random_two_ru(std::uint64_t seed, const TwoRuLimits& limits) {
  Rng rng(seed);
  for (;;) {
    const int kappa = rng.integer(1, limits.max_rbs);
    Instance::RateTensor gamma(2);
    std::vector<std::vector<double>> weight(2);
    for (int i = 0; i < 2; ++i) {
      const int n = rng.integer(1, limits.max_users);
      gamma[i].assign(n, std::vector<double>(kappa));
      for (auto& row : gamma[i]) {
        for (double& g : row) g = rng.integer(0, limits.max_gamma);
      }
      for (int j = 0; j < n; ++j) weight[i].push_back(rng.integer(1, limits.max_weight));
    }
    const Instance probe(gamma, weight, {kInfinity, kInfinity}, 0.0);
    const double u0 = usable_rate(probe, 0);
    const double u1 = usable_rate(probe, 1);
    if (u0 < 2.0 || u1 < 2.0) continue;
    const double c0 = rng.integer(1, static_cast<int>(u0) - 1);
    const double c1 = rng.integer(1, static_cast<int>(u1) - 1);
    const double total = rng.integer(1, static_cast<int>(c0 + c1) - 1);
    return Instance(gamma, weight, {c0, c1}, total);
  }
}

CorpusReport run_corpus(const CorpusOptions& options) {
  CorpusReport report;
  Checker checker(report);
  Rng lambda_rng(options.seed ^ 0x5eedULL);
  std::uint64_t seed = options.seed;
  auto guarded = [&](auto&& body) {
    checker.set_seed(seed);
    try {
      body();
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    ++report.instances;
    ++seed;
  };
  for (int n = 0; n < options.single_cell; ++n) {
    guarded([&] { check_single_cell(random_single_cell(seed), checker, report, lambda_rng); });
  }
  for (int n = 0; n < options.two_ru; ++n) {
    guarded([&] { check_two_ru(random_two_ru(seed), seed, checker); });
  }
  return report;
}

}  // namespace vran::corpus
