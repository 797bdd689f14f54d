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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vran {

namespace {

double number_or_inf(const nlohmann::json& v, const char* field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string() && v.get<std::string>() == "inf") return kInfinity;
  throw StructuralError(std::string(field) + " entries must be numbers or \"inf\"");
}

double number(const nlohmann::json& v, const char* field) {
  if (!v.is_number()) throw StructuralError(std::string(field) + " entries must be numbers");
  return v.get<double>();
}

const nlohmann::json& field(const nlohmann::json& doc, const char* name) {
  if (!doc.contains(name)) throw StructuralError(std::string("missing field ") + name);
  return doc.at(name);
}

}  // namespace

Instance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw StructuralError("instance document must be a JSON object");
  if (doc.contains("version") &&
      (!doc["version"].is_number_integer() || doc["version"].get<int>() != kInstanceFormatVersion)) {
    throw StructuralError("unsupported instance format version");
  }
  const auto& caps = field(doc, "ru_capacity");
  const auto& weights = field(doc, "weight");
  const auto& gammas = field(doc, "gamma");
  if (!caps.is_array() || !weights.is_array() || !gammas.is_array()) {
    throw StructuralError("ru_capacity, weight and gamma must be arrays");
  }
  std::vector<double> ru_capacity;
  for (const auto& c : caps) ru_capacity.push_back(number_or_inf(c, "ru_capacity"));
  std::vector<std::vector<double>> weight;
  for (const auto& row : weights) {
    if (!row.is_array()) throw StructuralError("weight must be an array of arrays");
    auto& out = weight.emplace_back();
    for (const auto& w : row) out.push_back(number(w, "weight"));
  }
  Instance::RateTensor gamma;
  for (const auto& ru : gammas) {
    if (!ru.is_array()) throw StructuralError("gamma must be nested three levels deep");
    auto& users = gamma.emplace_back();
    for (const auto& user : ru) {
      if (!user.is_array()) throw StructuralError("gamma must be nested three levels deep");
      auto& rbs = users.emplace_back();
      for (const auto& g : user) rbs.push_back(number(g, "gamma"));
    }
  }
  return Instance(gamma, weight, std::move(ru_capacity),
                  number(field(doc, "total_capacity"), "total_capacity"));
}

nlohmann::json instance_to_json(const Instance& instance) {
  nlohmann::json doc;
  doc["version"] = kInstanceFormatVersion;
  nlohmann::json caps = nlohmann::json::array();
  for (double c : instance.ru_capacities()) {
    if (std::isinf(c)) {
      caps.push_back("inf");
    } else {
      caps.push_back(c);
    }
  }
  doc["ru_capacity"] = caps;
  doc["total_capacity"] = instance.total_capacity();
  doc["weight"] = instance.weight_matrix();
  doc["gamma"] = instance.gamma_tensor();
  return doc;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open instance file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("cannot parse " + path + ": " + e.what());
  }
  return instance_from_json(doc);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write instance file " + path);
  out << instance_to_json(instance).dump(2) << '\n';
}

std::string format_result(const Instance& instance, const SolveResult& result) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", result.objective);
  out << "objective " << buf << '\n';
  out << "assignment (ru user rb rate)\n";
  for (const Triple& t : result.allocation.assignment().triples()) {
    std::snprintf(buf, sizeof(buf), "%.12g", result.allocation.rate(instance, t.ru, t.user, t.rb));
    out << "  " << t.ru << ' ' << t.user << ' ' << t.rb << ' ' << buf << '\n';
  }
  for (const auto& [name, value] : result.meta) {
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    out << name << ' ' << buf << '\n';
  }
  return out.str();
}

}  // namespace vran
