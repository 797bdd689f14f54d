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

// Core domain types for single-slot scheduling with mid-haul capacity limits.
//
// A slot is described by an Instance: m remote units (RUs), each serving n_i
// users over kappa resource blocks (RBs). Assigning RB k of RU i to user j
// allows a rate of at most gamma(i, j, k); the rates flowing through RU i are
// bounded by its fiber capacity C_i and all rates together by the PON
// capacity C. The objective is the weighted throughput
//
//   sum_ij weight(i, j) * sum_k y(i, j, k).
//
// Weights are generic: 1/R for log utility, U'(R) for other concave
// utilities, or queue lengths for max-weight scheduling.

#ifndef VRAN_MODEL_H_
#define VRAN_MODEL_H_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vran {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Tolerance on constraint slacks, scaled by max(1, |bound|) so that it stays
// meaningful for capacities in bps.
inline constexpr double kFeasibilityTolerance = 1e-9;
// Relative tolerance on objective comparisons.
inline constexpr double kObjectiveTolerance = 1e-9;

// Malformed or dimensionally inconsistent input.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-range algorithm parameter (epsilon, lambda, shrink, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver refused to run because the instance exceeds its work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double required, double budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  double required() const { return required_; }
  double budget() const { return budget_; }

 private:
  double required_;
  double budget_;
};

struct Triple {
  int ru = 0;
  int user = 0;
  int rb = 0;

  auto operator<=>(const Triple&) const = default;
};

class Instance {
 public:
  using RateTensor = std::vector<std::vector<std::vector<double>>>;

  // gamma[i][j][k], weight[i][j]. All RUs must share the same RB count.
  // An RU may serve zero users; its RBs are then never assignable.
  Instance(const RateTensor& gamma, const std::vector<std::vector<double>>& weight,
           std::vector<double> ru_capacity, double total_capacity);

  int ru_count() const { return static_cast<int>(users_per_ru_.size()); }
  int users(int ru) const { return users_per_ru_[ru]; }
  const std::vector<int>& users_per_ru() const { return users_per_ru_; }
  int rb_count() const { return rb_count_; }
  int total_users() const { return user_offset_.back(); }
  int max_users() const;

  // Position of (ru, user) in the flat user numbering.
  int flat_user(int ru, int user) const { return user_offset_[ru] + user; }
  // Position of (ru, user, rb) in flat rate tensors.
  std::size_t flat_index(int ru, int user, int rb) const {
    return static_cast<std::size_t>(flat_user(ru, user)) * rb_count_ + rb;
  }
  std::size_t tensor_size() const {
    return static_cast<std::size_t>(total_users()) * rb_count_;
  }

  double gamma(int ru, int user, int rb) const { return gamma_[flat_index(ru, user, rb)]; }
  double weight(int ru, int user) const { return weight_[flat_user(ru, user)]; }
  double ru_capacity(int ru) const { return ru_capacity_[ru]; }
  double total_capacity() const { return total_capacity_; }

  const std::vector<double>& flat_gamma() const { return gamma_; }
  const std::vector<double>& flat_weight() const { return weight_; }
  const std::vector<double>& ru_capacities() const { return ru_capacity_; }

  RateTensor gamma_tensor() const;
  std::vector<std::vector<double>> weight_matrix() const;

  // True when no C_i can bind below C, i.e. only the PON constraint matters.
  bool pon_limited_only() const;

  bool operator==(const Instance&) const = default;

 private:
  std::vector<int> users_per_ru_;
  std::vector<int> user_offset_;
  int rb_count_ = 0;
  std::vector<double> gamma_;
  std::vector<double> weight_;
  std::vector<double> ru_capacity_;
  double total_capacity_ = 0.0;
};

// One RU with unbounded fiber capacity; indices drop the RU subscript.
class SingleCellInstance {
 public:
  // gamma[j][k], weight[j].
  SingleCellInstance(const std::vector<std::vector<double>>& gamma,
                     const std::vector<double>& weight, double total_capacity);

  // Accepts a one-RU instance; a finite C_0 folds into the PON capacity.
  static SingleCellInstance from_instance(const Instance& instance);

  int users() const { return inner_.users(0); }
  int rb_count() const { return inner_.rb_count(); }
  double gamma(int user, int rb) const { return inner_.gamma(0, user, rb); }
  double weight(int user) const { return inner_.weight(0, user); }
  double total_capacity() const { return inner_.total_capacity(); }

  const Instance& instance() const { return inner_; }

 private:
  explicit SingleCellInstance(Instance inner) : inner_(std::move(inner)) {}
  Instance inner_;
};

// PON-only multi-RU instance flattened onto one cell: every (ru, rb) slot
// becomes an RB of the cell and users of other RUs see zero rate on it.
struct CollapsedInstance {
  SingleCellInstance cell;
  // cell RB index -> (ru, rb) of the source instance
  std::vector<std::pair<int, int>> rb_origin;
  // cell user index -> (ru, user) of the source instance
  std::vector<std::pair<int, int>> user_origin;
};

// Requires pon_limited_only(); throws StructuralError otherwise.
CollapsedInstance collapse_to_single_cell(const Instance& instance);

class Assignment {
 public:
  static constexpr int kUnassigned = -1;

  Assignment(int ru_count, int rb_count);
  explicit Assignment(const Instance& instance)
      : Assignment(instance.ru_count(), instance.rb_count()) {}

  int ru_count() const { return ru_count_; }
  int rb_count() const { return rb_count_; }
  // User holding (ru, rb), or kUnassigned.
  int user_at(int ru, int rb) const { return slots_[static_cast<std::size_t>(ru) * rb_count_ + rb]; }
  bool assigned(int ru, int rb) const { return user_at(ru, rb) != kUnassigned; }
  void assign(int ru, int rb, int user) { slots_[static_cast<std::size_t>(ru) * rb_count_ + rb] = user; }
  void clear(int ru, int rb) { assign(ru, rb, kUnassigned); }
  int assigned_count() const;

  // Assigned triples in lexicographic (ru, user, rb) order.
  std::vector<Triple> triples() const;

  // Throws StructuralError if any referenced user is out of range.
  void validate(const Instance& instance) const;

  bool operator==(const Assignment&) const = default;

 private:
  int ru_count_;
  int rb_count_;
  std::vector<int> slots_;
};

class Allocation {
 public:
  explicit Allocation(const Instance& instance);
  Allocation(Assignment assignment, std::vector<double> rates);

  const Assignment& assignment() const { return assignment_; }
  Assignment& mutable_assignment() { return assignment_; }
  // Rates in the instance's flat tensor layout.
  const std::vector<double>& rates() const { return rates_; }
  std::vector<double>& mutable_rates() { return rates_; }

  double rate(const Instance& instance, int ru, int user, int rb) const {
    return rates_[instance.flat_index(ru, user, rb)];
  }
  void set_rate(const Instance& instance, int ru, int user, int rb, double y) {
    rates_[instance.flat_index(ru, user, rb)] = y;
  }
  // Sum of y over (user, rb) at an RU.
  double ru_load(const Instance& instance, int ru) const;
  double total_load() const;

 private:
  Assignment assignment_;
  std::vector<double> rates_;
};

struct Violation {
  enum class Kind { kRateCap, kUnassignedRate, kNegativeRate, kRuCapacity, kTotalCapacity };
  Kind kind;
  Triple where;  // ru only for kRuCapacity; unused for kTotalCapacity
  double slack;  // negative amount by which the constraint is violated
};

std::string to_string(Violation::Kind kind);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
};

// Checks rate caps, one user per (ru, rb), nonnegativity and both capacity
// families, allowing slack down to -kFeasibilityTolerance * max(1, |bound|).
// Throws StructuralError on dimension mismatch.
FeasibilityReport check_feasible(const Instance& instance, const Allocation& allocation);

// sum_ij w_ij sum_k y_ijk. Rejects (throws StructuralError) infeasible input.
double objective_of(const Instance& instance, const Allocation& allocation);

// Same sum on a raw rate tensor; no feasibility requirement.
double weighted_sum(const Instance& instance, std::span<const double> rates);

struct SolveResult {
  Allocation allocation;
  double objective = 0.0;
  // Named diagnostics: lp_optimum, dual_upper_bound, iterations, fractional_rbs, ...
  std::map<std::string, double> meta;
};

// Wraps an allocation, computing its objective.
SolveResult make_result(const Instance& instance, Allocation allocation,
                        std::map<std::string, double> meta = {});

inline constexpr double kDefaultEnumerationBudget = 2e6;

// Enumeration budget, overridable through VRAN_ENUM_BUDGET.
double enumeration_budget();

// Exact optimum by enumerating every assignment and waterfilling each.
// Throws BudgetExceeded when (max_i n_i + 1)^(m*kappa) > budget.
SolveResult brute_force_oracle(const Instance& instance,
                               double budget = enumeration_budget());

// Single cell with integer rates and capacity; one integer step = quantum.
class QuantizedInstance {
 public:
  const SingleCellInstance& source() const { return source_; }
  double quantum() const { return quantum_; }
  bool clamped() const { return clamped_; }
  int users() const { return source_.users(); }
  int rb_count() const { return source_.rb_count(); }
  std::int64_t gamma(int user, int rb) const {
    return gamma_[static_cast<std::size_t>(user) * source_.rb_count() + rb];
  }
  std::int64_t capacity() const { return capacity_; }

  // Integer problem mapped back to capacity units (gamma' * quantum).
  SingleCellInstance dequantized() const;

 private:
  friend QuantizedInstance quantize(const SingleCellInstance&, double);
  QuantizedInstance(SingleCellInstance source, double quantum, std::vector<std::int64_t> gamma,
                    std::int64_t capacity, bool clamped)
      : source_(std::move(source)),
        quantum_(quantum),
        gamma_(std::move(gamma)),
        capacity_(capacity),
        clamped_(clamped) {}

  SingleCellInstance source_;
  double quantum_;
  std::vector<std::int64_t> gamma_;
  std::int64_t capacity_;
  bool clamped_;
};

// gamma' = floor(min(gamma, C) / quantum), C' = floor(C / quantum).
QuantizedInstance quantize(const SingleCellInstance& instance, double quantum);

}  // namespace vran

#endif  // VRAN_MODEL_H_
