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

#include "vran/model.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "vran/alloc.h"

namespace vran {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw StructuralError(message);
}

bool nonnegative(double v) { return v >= 0.0 && !std::isnan(v); }

}  // namespace

Instance::Instance(const RateTensor& gamma, const std::vector<std::vector<double>>& weight,
                   std::vector<double> ru_capacity, double total_capacity)
    : ru_capacity_(std::move(ru_capacity)), total_capacity_(total_capacity) {
  const int m = static_cast<int>(gamma.size());
  require(m > 0, "instance needs at least one RU");
  require(static_cast<int>(weight.size()) == m, "weight has wrong RU count");
  require(static_cast<int>(ru_capacity_.size()) == m, "ru_capacity has wrong RU count");
  require(nonnegative(total_capacity_) && std::isfinite(total_capacity_),
          "total capacity must be finite and nonnegative");

  rb_count_ = -1;
  user_offset_.push_back(0);
  for (int i = 0; i < m; ++i) {
    const int n = static_cast<int>(gamma[i].size());
    require(static_cast<int>(weight[i].size()) == n, "weight row size differs from gamma");
    require(nonnegative(ru_capacity_[i]), "RU capacity must be nonnegative");
    users_per_ru_.push_back(n);
    user_offset_.push_back(user_offset_.back() + n);
    for (int j = 0; j < n; ++j) {
      if (rb_count_ < 0) rb_count_ = static_cast<int>(gamma[i][j].size());
      require(static_cast<int>(gamma[i][j].size()) == rb_count_, "RB count differs between users");
      require(nonnegative(weight[i][j]) && std::isfinite(weight[i][j]),
              "weights must be finite and nonnegative");
      weight_.push_back(weight[i][j]);
      for (double g : gamma[i][j]) {
        require(nonnegative(g) && std::isfinite(g), "gamma must be finite and nonnegative");
        gamma_.push_back(g);
      }
    }
  }
  require(rb_count_ > 0, "instance needs at least one user and one RB");
}

int Instance::max_users() const {
  return *std::max_element(users_per_ru_.begin(), users_per_ru_.end());
}

Instance::RateTensor Instance::gamma_tensor() const {
  RateTensor out(ru_count());
  for (int i = 0; i < ru_count(); ++i) {
    out[i].resize(users(i));
    for (int j = 0; j < users(i); ++j) {
      const auto* row = gamma_.data() + flat_index(i, j, 0);
      out[i][j].assign(row, row + rb_count_);
    }
  }
  return out;
}

std::vector<std::vector<double>> Instance::weight_matrix() const {
  std::vector<std::vector<double>> out(ru_count());
  for (int i = 0; i < ru_count(); ++i) {
    for (int j = 0; j < users(i); ++j) out[i].push_back(weight(i, j));
  }
  return out;
}

bool Instance::pon_limited_only() const {
  return std::all_of(ru_capacity_.begin(), ru_capacity_.end(),
                     [&](double c) { return c >= total_capacity_; });
}

SingleCellInstance::SingleCellInstance(const std::vector<std::vector<double>>& gamma,
                                       const std::vector<double>& weight, double total_capacity)
    : inner_(Instance::RateTensor{gamma}, {weight}, {kInfinity}, total_capacity) {}

SingleCellInstance SingleCellInstance::from_instance(const Instance& instance) {
  require(instance.ru_count() == 1, "single-cell solvers need exactly one RU");
  const double c = std::min(instance.total_capacity(), instance.ru_capacity(0));
  return SingleCellInstance(Instance(instance.gamma_tensor(), instance.weight_matrix(),
                                     {kInfinity}, c));
}

CollapsedInstance collapse_to_single_cell(const Instance& instance) {
  require(instance.pon_limited_only(),
          "instance has a binding RU capacity; it cannot be solved as a single cell");
  const int kappa = instance.rb_count();
  const int cell_rbs = instance.ru_count() * kappa;
  std::vector<std::vector<double>> gamma;
  std::vector<double> weight;
  std::vector<std::pair<int, int>> rb_origin;
  std::vector<std::pair<int, int>> user_origin;
  for (int i = 0; i < instance.ru_count(); ++i) {
    for (int k = 0; k < kappa; ++k) rb_origin.emplace_back(i, k);
    for (int j = 0; j < instance.users(i); ++j) {
      std::vector<double> row(cell_rbs, 0.0);
      for (int k = 0; k < kappa; ++k) row[i * kappa + k] = instance.gamma(i, j, k);
      gamma.push_back(std::move(row));
      weight.push_back(instance.weight(i, j));
      user_origin.emplace_back(i, j);
    }
  }
  return CollapsedInstance{SingleCellInstance(gamma, weight, instance.total_capacity()),
                           std::move(rb_origin), std::move(user_origin)};
}

Assignment::Assignment(int ru_count, int rb_count)
    : ru_count_(ru_count),
      rb_count_(rb_count),
      slots_(static_cast<std::size_t>(ru_count) * rb_count, kUnassigned) {}

int Assignment::assigned_count() const {
  return static_cast<int>(std::count_if(slots_.begin(), slots_.end(),
                                        [](int u) { return u != kUnassigned; }));
}

std::vector<Triple> Assignment::triples() const {
  std::vector<Triple> out;
  for (int i = 0; i < ru_count_; ++i) {
    for (int k = 0; k < rb_count_; ++k) {
      if (assigned(i, k)) out.push_back({i, user_at(i, k), k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Assignment::validate(const Instance& instance) const {
  require(ru_count_ == instance.ru_count() && rb_count_ == instance.rb_count(),
          "assignment dimensions do not match the instance");
  for (int i = 0; i < ru_count_; ++i) {
    for (int k = 0; k < rb_count_; ++k) {
      const int u = user_at(i, k);
      require(u == kUnassigned || (u >= 0 && u < instance.users(i)),
              "assignment references a user outside its RU");
    }
  }
}

Allocation::Allocation(const Instance& instance)
    : assignment_(instance), rates_(instance.tensor_size(), 0.0) {}

Allocation::Allocation(Assignment assignment, std::vector<double> rates)
    : assignment_(std::move(assignment)), rates_(std::move(rates)) {}

double Allocation::ru_load(const Instance& instance, int ru) const {
  const auto first = rates_.begin() + static_cast<std::ptrdiff_t>(instance.flat_index(ru, 0, 0));
  const auto count = static_cast<std::ptrdiff_t>(instance.users(ru)) * instance.rb_count();
  return std::accumulate(first, first + count, 0.0);
}

double Allocation::total_load() const { return std::accumulate(rates_.begin(), rates_.end(), 0.0); }

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kRateCap:
      return "rate above gamma";
    case Violation::Kind::kUnassignedRate:
      return "rate on unassigned RB";
    case Violation::Kind::kNegativeRate:
      return "negative rate";
    case Violation::Kind::kRuCapacity:
      return "RU capacity";
    case Violation::Kind::kTotalCapacity:
      return "total capacity";
  }
  return "unknown";
}

FeasibilityReport check_feasible(const Instance& instance, const Allocation& allocation) {
  allocation.assignment().validate(instance);
  require(allocation.rates().size() == instance.tensor_size(),
          "rate tensor size does not match the instance");
  FeasibilityReport report;
  auto flag = [&](Violation::Kind kind, Triple where, double slack) {
    report.feasible = false;
    report.violations.push_back({kind, where, slack});
  };
  const Assignment& x = allocation.assignment();
  auto below = [](double slack, double bound) {
    return slack < -kFeasibilityTolerance * std::max(1.0, std::abs(bound));
  };
  double total = 0.0;
  for (int i = 0; i < instance.ru_count(); ++i) {
    double ru_total = 0.0;
    for (int j = 0; j < instance.users(i); ++j) {
      for (int k = 0; k < instance.rb_count(); ++k) {
        const double y = allocation.rate(instance, i, j, k);
        ru_total += y;
        if (y < -kFeasibilityTolerance) flag(Violation::Kind::kNegativeRate, {i, j, k}, y);
        if (x.user_at(i, k) == j) {
          const double slack = instance.gamma(i, j, k) - y;
          if (below(slack, instance.gamma(i, j, k))) flag(Violation::Kind::kRateCap, {i, j, k}, slack);
        } else if (y > kFeasibilityTolerance) {
          flag(Violation::Kind::kUnassignedRate, {i, j, k}, -y);
        }
      }
    }
    const double slack = instance.ru_capacity(i) - ru_total;
    if (below(slack, instance.ru_capacity(i))) flag(Violation::Kind::kRuCapacity, {i, 0, 0}, slack);
    total += ru_total;
  }
  const double slack = instance.total_capacity() - total;
  if (below(slack, instance.total_capacity())) flag(Violation::Kind::kTotalCapacity, {}, slack);
  return report;
}

double weighted_sum(const Instance& instance, std::span<const double> rates) {
  require(rates.size() == instance.tensor_size(), "rate tensor size does not match the instance");
  double sum = 0.0;
  const int kappa = instance.rb_count();
  for (int u = 0; u < instance.total_users(); ++u) {
    double user_total = 0.0;
    for (int k = 0; k < kappa; ++k) user_total += rates[static_cast<std::size_t>(u) * kappa + k];
    sum += instance.flat_weight()[u] * user_total;
  }
  return sum;
}

double objective_of(const Instance& instance, const Allocation& allocation) {
  const FeasibilityReport report = check_feasible(instance, allocation);
  if (!report.feasible) {
    const Violation& v = report.violations.front();
    std::ostringstream msg;
    msg << "objective requested for an infeasible allocation (" << to_string(v.kind)
        << ", slack " << v.slack << ")";
    throw StructuralError(msg.str());
  }
  return weighted_sum(instance, allocation.rates());
}

SolveResult make_result(const Instance& instance, Allocation allocation,
                        std::map<std::string, double> meta) {
  const double objective = objective_of(instance, allocation);
  return SolveResult{std::move(allocation), objective, std::move(meta)};
}

double enumeration_budget() {
  if (const char* env = std::getenv("VRAN_ENUM_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return kDefaultEnumerationBudget;
}

SolveResult brute_force_oracle(const Instance& instance, double budget) {
  const int m = instance.ru_count();
  const int kappa = instance.rb_count();
  const int slots = m * kappa;
  // Each slot takes one of (n_i + 1) choices.
  const double required =
      std::pow(static_cast<double>(instance.max_users() + 1), static_cast<double>(slots));
  if (required > budget) {
    std::ostringstream msg;
    msg << std::fixed << std::setprecision(0) << "brute force needs " << required << " assignments, budget is " << budget;
    throw BudgetExceeded(msg.str(), required, budget);
  }

  // Mixed-radix counter over slots; digit 0 = unassigned, d = user d-1.
  std::vector<int> digit(slots, 0);
  Assignment x(instance);
  std::optional<Allocation> best;
  double best_value = -1.0;
  std::int64_t enumerated = 0;
  while (true) {
    ++enumerated;
    Allocation candidate = waterfill(instance, x);
    const double value = weighted_sum(instance, candidate.rates());
    if (value > best_value) {
      best_value = value;
      best = std::move(candidate);
    }
    // Increment with the last slot as the least significant digit.
    int pos = slots - 1;
    for (; pos >= 0; --pos) {
      const int ru = pos / kappa;
      const int rb = pos % kappa;
      if (digit[pos] < instance.users(ru)) {
        ++digit[pos];
        x.assign(ru, rb, digit[pos] - 1);
        break;
      }
      digit[pos] = 0;
      x.clear(ru, rb);
    }
    if (pos < 0) break;
  }
  return make_result(instance, std::move(*best),
                     {{"enumerated", static_cast<double>(enumerated)}});
}

SingleCellInstance QuantizedInstance::dequantized() const {
  std::vector<std::vector<double>> gamma(users(), std::vector<double>(rb_count()));
  std::vector<double> weight(users());
  for (int j = 0; j < users(); ++j) {
    weight[j] = source_.weight(j);
    for (int k = 0; k < rb_count(); ++k) {
      gamma[j][k] = static_cast<double>(this->gamma(j, k)) * quantum_;
    }
  }
  return SingleCellInstance(gamma, weight, static_cast<double>(capacity_) * quantum_);
}

QuantizedInstance quantize(const SingleCellInstance& instance, double quantum) {
  if (!(quantum > 0.0) || !std::isfinite(quantum)) {
    throw ParameterError("quantum must be positive and finite");
  }
  const double c = instance.total_capacity();
  std::vector<std::int64_t> gamma;
  gamma.reserve(static_cast<std::size_t>(instance.users()) * instance.rb_count());
  bool clamped = false;
  for (int j = 0; j < instance.users(); ++j) {
    for (int k = 0; k < instance.rb_count(); ++k) {
      const double g = instance.gamma(j, k);
      if (g > c) clamped = true;
      gamma.push_back(static_cast<std::int64_t>(std::floor(std::min(g, c) / quantum)));
    }
  }
  const auto capacity = static_cast<std::int64_t>(std::floor(c / quantum));
  return QuantizedInstance(instance, quantum, std::move(gamma), capacity, clamped);
}

}  // namespace vran
