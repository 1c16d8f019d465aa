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

#include "covering/game.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace covering {
namespace {

bool Contains(const Action& action, ResourceIndex r) {
  return std::binary_search(action.begin(), action.end(), r);
}

template <Scalar T>
struct ResponseSummary {
  Action best_action;
  T best_value{};
  T current_value{};
};

template <Scalar T>
ResponseSummary<T> Summarize(const CoveringProblem& problem,
                             const RuleAccessor<T>& rules, int agent,
                             const Allocation& allocation,
                             const ResourceCounters& coverage) {
  const Action& current = allocation[agent];
  // Share r would pay if `agent` covered it alongside everyone else.
  auto marginal = [&](ResourceIndex r) -> T {
    const int others = coverage[r] - (Contains(current, r) ? 1 : 0);
    return ResourceValue<T>(problem, r) * rules.Share(r, others + 1);
  };

  ResponseSummary<T> out;
  for (ResourceIndex r : current) out.current_value += marginal(r);

  if (const auto* explicit_set =
          std::get_if<ExplicitActions>(&problem.action_set(agent))) {
    bool first = true;
    for (const Action& action : explicit_set->actions) {
      T value{};
      for (ResourceIndex r : action) value += marginal(r);
      if (first || StrictlyGreater(value, out.best_value)) {
        out.best_value = std::move(value);
        out.best_action = action;
        first = false;
      }
    }
    return out;
  }

  const auto& capacity_set = std::get<CapacityActions>(problem.action_set(agent));
  std::vector<std::pair<T, ResourceIndex>> candidates;
  candidates.reserve(capacity_set.accessible.size());
  for (ResourceIndex r : capacity_set.accessible) {
    T m = marginal(r);
    if (m > T{}) candidates.emplace_back(std::move(m), r);
  }
  const std::size_t take =
      std::min<std::size_t>(candidates.size(), capacity_set.capacity);
  std::partial_sort(candidates.begin(), candidates.begin() + take,
                    candidates.end(), [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first > b.first;
                      return a.second < b.second;
                    });
  for (std::size_t i = 0; i < take; ++i) {
    out.best_value += candidates[i].first;
    out.best_action.push_back(candidates[i].second);
  }
  std::sort(out.best_action.begin(), out.best_action.end());
  return out;
}

}  // namespace

CoveringProblem::CoveringProblem(std::vector<std::string> agent_ids,
                                 std::vector<Resource> resources,
                                 std::vector<ActionSet> action_sets)
    : agent_ids_(std::move(agent_ids)),
      resources_(std::move(resources)),
      action_sets_(std::move(action_sets)) {
  if (agent_ids_.empty()) throw ArgumentError("covering problem has no agents");
  if (agent_ids_.size() != action_sets_.size()) {
    throw ArgumentError("covering problem: " + std::to_string(agent_ids_.size()) +
                        " agents but " + std::to_string(action_sets_.size()) +
                        " action sets");
  }
  std::unordered_set<std::string> seen_agents;
  for (const auto& id : agent_ids_) {
    if (!seen_agents.insert(id).second) {
      throw ArgumentError("duplicate agent id '" + id + "'");
    }
  }
  fast_values_.reserve(resources_.size());
  for (std::size_t r = 0; r < resources_.size(); ++r) {
    const Resource& res = resources_[r];
    if (res.id.empty()) throw ArgumentError("resource with empty id");
    if (res.value.sign() < 0) {
      throw ArgumentError("resource '" + res.id + "' has a negative value");
    }
    if (!index_.emplace(res.id, static_cast<ResourceIndex>(r)).second) {
      throw ArgumentError("duplicate resource id '" + res.id + "'");
    }
    fast_values_.push_back(res.value.ToDouble());
  }
  auto check_action = [&](Action& action, int agent) {
    action = NormalizeAction(std::move(action));
    for (ResourceIndex r : action) {
      if (r < 0 || r >= num_resources()) {
        throw ArgumentError("agent '" + agent_ids_[agent] +
                            "' references unknown resource index " +
                            std::to_string(r));
      }
    }
  };
  for (int i = 0; i < num_agents(); ++i) {
    if (auto* explicit_set = std::get_if<ExplicitActions>(&action_sets_[i])) {
      if (explicit_set->actions.empty()) {
        throw ArgumentError("agent '" + agent_ids_[i] + "' has no actions");
      }
      for (Action& action : explicit_set->actions) check_action(action, i);
    } else {
      auto& capacity_set = std::get<CapacityActions>(action_sets_[i]);
      if (capacity_set.capacity < 1) {
        throw ArgumentError("agent '" + agent_ids_[i] +
                            "' needs a positive capacity");
      }
      check_action(capacity_set.accessible, i);
    }
  }
}

std::optional<ResourceIndex> CoveringProblem::FindResource(
    std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ResourceIndex CoveringProblem::ResourceIndexOf(std::string_view id) const {
  const auto found = FindResource(id);
  if (!found) throw ArgumentError("unknown resource id '" + std::string(id) + "'");
  return *found;
}

std::vector<std::string> DefaultAgentIds(int n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (int i = 1; i <= n; ++i) ids.push_back("p" + std::to_string(i));
  return ids;
}

Action NormalizeAction(Action action) {
  std::sort(action.begin(), action.end());
  action.erase(std::unique(action.begin(), action.end()), action.end());
  return action;
}

std::string FormatAction(const CoveringProblem& problem, const Action& action) {
  std::string out = "{";
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (i > 0) out += ",";
    out += problem.resource(action[i]).id;
  }
  return out + "}";
}

std::string FormatAllocation(const CoveringProblem& problem,
                             const Allocation& allocation) {
  std::string out = "(";
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatAction(problem, allocation[i]);
  }
  return out + ")";
}

bool IsFeasibleAction(const CoveringProblem& problem, int agent,
                      const Action& action) {
  if (!std::is_sorted(action.begin(), action.end()) ||
      std::adjacent_find(action.begin(), action.end()) != action.end()) {
    return false;
  }
  if (const auto* explicit_set =
          std::get_if<ExplicitActions>(&problem.action_set(agent))) {
    return std::find(explicit_set->actions.begin(), explicit_set->actions.end(),
                     action) != explicit_set->actions.end();
  }
  const auto& capacity_set = std::get<CapacityActions>(problem.action_set(agent));
  if (static_cast<int>(action.size()) > capacity_set.capacity) return false;
  return std::includes(capacity_set.accessible.begin(),
                       capacity_set.accessible.end(), action.begin(),
                       action.end());
}

bool IsFeasible(const CoveringProblem& problem, const Allocation& allocation) {
  if (static_cast<int>(allocation.size()) != problem.num_agents()) return false;
  for (int i = 0; i < problem.num_agents(); ++i) {
    if (!IsFeasibleAction(problem, i, allocation[i])) return false;
  }
  return true;
}

void CheckFeasible(const CoveringProblem& problem, const Allocation& allocation) {
  if (static_cast<int>(allocation.size()) != problem.num_agents()) {
    throw ArgumentError("allocation has " + std::to_string(allocation.size()) +
                        " entries for " + std::to_string(problem.num_agents()) +
                        " agents");
  }
  for (int i = 0; i < problem.num_agents(); ++i) {
    for (ResourceIndex r : allocation[i]) {
      if (r < 0 || r >= problem.num_resources()) {
        throw ArgumentError("agent '" + problem.agent_id(i) +
                            "' chose an unknown resource");
      }
    }
    if (!IsFeasibleAction(problem, i, allocation[i])) {
      throw ArgumentError("agent '" + problem.agent_id(i) +
                          "' chose an infeasible action " +
                          FormatAction(problem, allocation[i]));
    }
  }
}

ResourceCounters CoverageCounts(const CoveringProblem& problem,
                                const Allocation& allocation) {
  ResourceCounters counts(problem.num_resources(), 0);
  for (const Action& action : allocation) {
    for (ResourceIndex r : action) ++counts.at(r);
  }
  return counts;
}

int CoverageCount(const CoveringProblem& problem, const Allocation& allocation,
                  ResourceIndex resource) {
  if (resource < 0 || resource >= problem.num_resources()) {
    throw ArgumentError("unknown resource index " + std::to_string(resource));
  }
  int count = 0;
  for (const Action& action : allocation) count += Contains(action, resource);
  return count;
}

int CoverageCount(const CoveringProblem& problem, const Allocation& allocation,
                  std::string_view resource_id) {
  return CoverageCount(problem, allocation, problem.ResourceIndexOf(resource_id));
}

Rational Welfare(const CoveringProblem& problem, const Allocation& allocation) {
  CheckFeasible(problem, allocation);
  const ResourceCounters counts = CoverageCounts(problem, allocation);
  Rational total = 0;
  for (ResourceIndex r = 0; r < problem.num_resources(); ++r) {
    if (counts[r] > 0) total += problem.value(r);
  }
  return total;
}

double FastWelfare(const CoveringProblem& problem, const Allocation& allocation) {
  const ResourceCounters counts = CoverageCounts(problem, allocation);
  double total = 0.0;
  for (ResourceIndex r = 0; r < problem.num_resources(); ++r) {
    if (counts[r] > 0) total += problem.fast_value(r);
  }
  return total;
}

Rational TotalValue(const CoveringProblem& problem) {
  Rational total = 0;
  for (ResourceIndex r = 0; r < problem.num_resources(); ++r) {
    total += problem.value(r);
  }
  return total;
}

int Cardinality(const CoveringProblem& problem) {
  ResourceCounters reach(problem.num_resources(), 0);
  for (int i = 0; i < problem.num_agents(); ++i) {
    if (const auto* explicit_set =
            std::get_if<ExplicitActions>(&problem.action_set(i))) {
      Action reachable;
      for (const Action& action : explicit_set->actions) {
        reachable.insert(reachable.end(), action.begin(), action.end());
      }
      for (ResourceIndex r : NormalizeAction(std::move(reachable))) ++reach[r];
    } else {
      for (ResourceIndex r :
           std::get<CapacityActions>(problem.action_set(i)).accessible) {
        ++reach[r];
      }
    }
  }
  const int most = reach.empty() ? 0 : *std::max_element(reach.begin(), reach.end());
  // A problem where nobody can cover anything behaves as cardinality 1.
  return std::max(most, 1);
}

Rational Utility(const CoveringProblem& problem, const DistributionRule& rule,
                 int agent, const Allocation& allocation) {
  return UtilityOf(problem, RuleAccessor<Rational>::Fixed(rule), agent,
                   allocation);
}

Rational UtilityLearning(const CoveringProblem& problem,
                         const LearningRules& rules,
                         const ResourceCounters& counters, int agent,
                         const Allocation& allocation) {
  if (static_cast<int>(counters.size()) != problem.num_resources()) {
    throw ArgumentError("missing counters: need one per resource");
  }
  return UtilityOf(problem, RuleAccessor<Rational>::Learning(rules, counters),
                   agent, allocation);
}

template <Scalar T>
T UtilityOf(const CoveringProblem& problem, const RuleAccessor<T>& rules,
            int agent, const Allocation& allocation) {
  if (agent < 0 || agent >= problem.num_agents()) {
    throw ArgumentError("unknown agent index " + std::to_string(agent));
  }
  T total{};
  for (ResourceIndex r : allocation[agent]) {
    total += ResourceValue<T>(problem, r) *
             rules.Share(r, CoverageCount(problem, allocation, r));
  }
  return total;
}

template <Scalar T>
Action BestResponse(const CoveringProblem& problem, const RuleAccessor<T>& rules,
                    int agent, const Allocation& allocation,
                    const ResourceCounters& coverage) {
  ResponseSummary<T> summary =
      Summarize(problem, rules, agent, allocation, coverage);
  if (!StrictlyGreater(summary.best_value, summary.current_value)) {
    return allocation[agent];
  }
  return std::move(summary.best_action);
}

template <Scalar T>
Action BestResponse(const CoveringProblem& problem, const RuleAccessor<T>& rules,
                    int agent, const Allocation& allocation) {
  return BestResponse(problem, rules, agent, allocation,
                      CoverageCounts(problem, allocation));
}

template <Scalar T>
T BestResponseValue(const CoveringProblem& problem,
                    const RuleAccessor<T>& rules, int agent,
                    const Allocation& allocation) {
  return Summarize(problem, rules, agent, allocation,
                   CoverageCounts(problem, allocation))
      .best_value;
}

template <Scalar T>
bool IsNash(const CoveringProblem& problem, const RuleAccessor<T>& rules,
            const Allocation& allocation) {
  const ResourceCounters coverage = CoverageCounts(problem, allocation);
  for (int i = 0; i < problem.num_agents(); ++i) {
    const auto summary = Summarize(problem, rules, i, allocation, coverage);
    if (StrictlyGreater(summary.best_value, summary.current_value)) return false;
  }
  return true;
}

template <Scalar T>
T Potential(const CoveringProblem& problem, const RuleAccessor<T>& rules,
            const Allocation& allocation) {
  const ResourceCounters coverage = CoverageCounts(problem, allocation);
  T total{};
  for (ResourceIndex r = 0; r < problem.num_resources(); ++r) {
    T shares{};
    for (int j = 1; j <= coverage[r]; ++j) shares += rules.Share(r, j);
    total += ResourceValue<T>(problem, r) * shares;
  }
  return total;
}

#define COVERING_INSTANTIATE_GAME(T)                                          \
  template T UtilityOf<T>(const CoveringProblem&, const RuleAccessor<T>&, int, \
                          const Allocation&);                                  \
  template Action BestResponse<T>(const CoveringProblem&,                      \
                                  const RuleAccessor<T>&, int,                 \
                                  const Allocation&);                          \
  template Action BestResponse<T>(const CoveringProblem&,                      \
                                  const RuleAccessor<T>&, int,                 \
                                  const Allocation&, const ResourceCounters&); \
  template T BestResponseValue<T>(const CoveringProblem&,                      \
                                  const RuleAccessor<T>&, int,                 \
                                  const Allocation&);                          \
  template bool IsNash<T>(const CoveringProblem&, const RuleAccessor<T>&,      \
                          const Allocation&);                                  \
  template T Potential<T>(const CoveringProblem&, const RuleAccessor<T>&,      \
                          const Allocation&);

COVERING_INSTANTIATE_GAME(Rational)
COVERING_INSTANTIATE_GAME(double)

#undef COVERING_INSTANTIATE_GAME

}  // namespace covering
