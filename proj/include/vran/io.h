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

// Instance files are JSON documents:
//
//   {
//     "version": 1,
//     "ru_capacity": [12.5, "inf"],          // C_i per RU; "inf" = unbounded
//     "total_capacity": 20,                  // C, finite
//     "weight": [[1, 0.5], [2]],             // w_ij, one row per RU
//     "gamma": [[[1, 1], [4, 4]], [[3, 0]]]  // gamma_ijk: RU -> user -> RB
//   }
//
// "version" is optional on input and always written. Finite doubles
// round-trip bit-exactly.

#ifndef VRAN_IO_H_
#define VRAN_IO_H_

#include <string>

#include "json.hpp"
#include "vran/model.h"

namespace vran {

inline constexpr int kInstanceFormatVersion = 1;

// Throws StructuralError on malformed documents.
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// Human-readable dump: objective, assigned triples with rates, meta.
std::string format_result(const Instance& instance, const SolveResult& result);

}  // namespace vran

#endif  // VRAN_IO_H_
