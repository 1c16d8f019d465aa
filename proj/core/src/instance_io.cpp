// Copyright 2026 The Authors.
//
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

#include "covering/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace covering {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

std::string IdFrom(const json& node) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return std::to_string(node.get<long long>());
  throw ArgumentError("resource and agent ids must be strings or integers");
}

Action ActionFrom(const CoveringProblem& problem, const json& node) {
  if (!node.is_array()) throw ArgumentError("an action must be an array of ids");
  Action action;
  for (const json& id : node) action.push_back(problem.ResourceIndexOf(IdFrom(id)));
  return NormalizeAction(std::move(action));
}

// The problem only exists after parsing; ids are resolved against a lookup
// built from the resource list first.
class ResourceLookup {
 public:
  explicit ResourceLookup(const std::vector<Resource>& resources) {
    for (std::size_t r = 0; r < resources.size(); ++r) {
      index_.emplace(resources[r].id, static_cast<ResourceIndex>(r));
    }
  }
  Action ActionFrom(const json& node) const {
    if (!node.is_array()) throw ArgumentError("an action must be an array of ids");
    Action action;
    for (const json& id : node) {
      const std::string key = IdFrom(id);
      const auto it = index_.find(key);
      if (it == index_.end()) {
        throw ArgumentError("action references unknown resource '" + key + "'");
      }
      action.push_back(it->second);
    }
    return action;
  }

 private:
  std::unordered_map<std::string, ResourceIndex> index_;
};

}  // namespace

std::string ValueToText(const Rational& value) {
  mpz_class den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return value.ToFraction();
  return value.ToFixed(std::max(twos, fives));
}

Rational ValueFromText(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    return Rational::FromFraction(text);
  }
  return Rational::FromDecimal(text);
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CoveringProblem ParseInstance(std::string_view json_text) {
  const json doc = ParseJson(json_text, "instance");
  try {
    if (!doc.is_object()) throw ArgumentError("instance must be a JSON object");

    std::vector<Resource> resources;
    for (const json& node : doc.at("resources")) {
      const json& value = node.at("value");
      Rational v;
      if (value.is_string()) {
        v = ValueFromText(value.get<std::string>());
      } else if (value.is_number_integer()) {
        v = Rational(value.get<long>());
      } else {
        throw ArgumentError("resource values must be decimal strings");
      }
      resources.push_back({IdFrom(node.at("id")), std::move(v)});
    }

    const json& agents = doc.at("agents");
    std::vector<std::string> agent_ids;
    if (agents.is_number_integer()) {
      const long n = agents.get<long>();
      if (n < 1) throw ArgumentError("instance needs at least one agent");
      agent_ids = DefaultAgentIds(static_cast<int>(n));
    } else if (agents.is_array()) {
      for (const json& id : agents) agent_ids.push_back(IdFrom(id));
    } else {
      throw ArgumentError("'agents' must be a count or a list of ids");
    }

    const ResourceLookup lookup(resources);
    std::vector<ActionSet> action_sets;
    for (const json& node : doc.at("action_sets")) {
      const std::string type = node.at("type").get<std::string>();
      if (type == "explicit") {
        ExplicitActions set;
        for (const json& action : node.at("actions")) {
          set.actions.push_back(lookup.ActionFrom(action));
        }
        action_sets.emplace_back(std::move(set));
      } else if (type == "capacity") {
        CapacityActions set;
        set.accessible = lookup.ActionFrom(node.at("accessible"));
        set.capacity = node.at("capacity").get<int>();
        action_sets.emplace_back(std::move(set));
      } else {
        throw ArgumentError("unknown action set type '" + type + "'");
      }
    }
    return CoveringProblem(std::move(agent_ids), std::move(resources),
                           std::move(action_sets));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("instance: ") + e.what());
  }
}

CoveringProblem LoadInstance(const std::filesystem::path& path) {
  return ParseInstance(ReadTextFile(path));
}

std::string InstanceToJson(const CoveringProblem& problem) {
  json doc;
  doc["agents"] = json::array();
  for (int i = 0; i < problem.num_agents(); ++i) {
    doc["agents"].push_back(problem.agent_id(i));
  }
  doc["resources"] = json::array();
  for (ResourceIndex r = 0; r < problem.num_resources(); ++r) {
    doc["resources"].push_back(
        {{"id", problem.resource(r).id}, {"value", ValueToText(problem.value(r))}});
  }
  auto ids = [&](const Action& action) {
    json out = json::array();
    for (ResourceIndex r : action) out.push_back(problem.resource(r).id);
    return out;
  };
  doc["action_sets"] = json::array();
  for (int i = 0; i < problem.num_agents(); ++i) {
    if (const auto* set = std::get_if<ExplicitActions>(&problem.action_set(i))) {
      json actions = json::array();
      for (const Action& action : set->actions) actions.push_back(ids(action));
      doc["action_sets"].push_back({{"type", "explicit"}, {"actions", actions}});
    } else {
      const auto& cap = std::get<CapacityActions>(problem.action_set(i));
      doc["action_sets"].push_back({{"type", "capacity"},
                                    {"accessible", ids(cap.accessible)},
                                    {"capacity", cap.capacity}});
    }
  }
  return doc.dump(2) + "\n";
}

Allocation ParseAllocation(const CoveringProblem& problem,
                           std::string_view json_text) {
  const json doc = ParseJson(json_text, "allocation");
  if (!doc.is_array()) throw ArgumentError("allocation must be a JSON array");
  Allocation allocation;
  for (const json& node : doc) allocation.push_back(ActionFrom(problem, node));
  CheckFeasible(problem, allocation);
  return allocation;
}

Allocation LoadAllocation(const CoveringProblem& problem,
                          const std::filesystem::path& path) {
  return ParseAllocation(problem, ReadTextFile(path));
}

std::string AllocationToJson(const CoveringProblem& problem,
                             const Allocation& allocation) {
  json doc = json::array();
  for (const Action& action : allocation) {
    json ids = json::array();
    for (ResourceIndex r : action) ids.push_back(problem.resource(r).id);
    doc.push_back(ids);
  }
  return doc.dump() + "\n";
}

}  // namespace covering
