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

#ifndef COVERING_GAME_HPP_
#define COVERING_GAME_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "covering/errors.hpp"
#include "covering/rational.hpp"
#include "covering/rules.hpp"

namespace covering {

using ResourceIndex = int;
// Sorted, duplicate-free set of resource indices.
using Action = std::vector<ResourceIndex>;
// One action per agent, indexed by agent.
using Allocation = std::vector<Action>;
// Per-resource non-negative integers (coverage counts or learning counters).
using ResourceCounters = std::vector<int>;

struct Resource {
  std::string id;
  Rational value;
};

// The agent picks one of a fixed list of actions.
struct ExplicitActions {
  std::vector<Action> actions;
};

// The agent picks any subset of `accessible` with at most `capacity` members.
struct CapacityActions {
  Action accessible;
  int capacity = 1;
};

using ActionSet = std::variant<ExplicitActions, CapacityActions>;

class CoveringProblem {
 public:
  // Validates ids, values and action sets; actions are normalised to sorted
  // duplicate-free form. Throws ArgumentError.
  CoveringProblem(std::vector<std::string> agent_ids,
                  std::vector<Resource> resources,
                  std::vector<ActionSet> action_sets);

  int num_agents() const { return static_cast<int>(agent_ids_.size()); }
  int num_resources() const { return static_cast<int>(resources_.size()); }

  const std::string& agent_id(int agent) const { return agent_ids_[agent]; }
  const Resource& resource(ResourceIndex r) const { return resources_[r]; }
  const Rational& value(ResourceIndex r) const { return resources_[r].value; }
  double fast_value(ResourceIndex r) const { return fast_values_[r]; }
  const ActionSet& action_set(int agent) const { return action_sets_[agent]; }

  std::optional<ResourceIndex> FindResource(std::string_view id) const;
  // Throws ArgumentError for unknown ids.
  ResourceIndex ResourceIndexOf(std::string_view id) const;

 private:
  std::vector<std::string> agent_ids_;
  std::vector<Resource> resources_;
  std::vector<double> fast_values_;
  std::vector<ActionSet> action_sets_;
  std::unordered_map<std::string, ResourceIndex> index_;
};

// Agent ids "p1".."pn".
std::vector<std::string> DefaultAgentIds(int n);
// Sorts and removes duplicates.
Action NormalizeAction(Action action);
std::string FormatAction(const CoveringProblem& problem, const Action& action);
std::string FormatAllocation(const CoveringProblem& problem,
                             const Allocation& allocation);

bool IsFeasibleAction(const CoveringProblem& problem, int agent,
                      const Action& action);
bool IsFeasible(const CoveringProblem& problem, const Allocation& allocation);
// Throws ArgumentError naming the first infeasible agent.
void CheckFeasible(const CoveringProblem& problem, const Allocation& allocation);

ResourceCounters CoverageCounts(const CoveringProblem& problem,
                                const Allocation& allocation);
int CoverageCount(const CoveringProblem& problem, const Allocation& allocation,
                  ResourceIndex resource);
int CoverageCount(const CoveringProblem& problem, const Allocation& allocation,
                  std::string_view resource_id);

// Sum of values of resources covered at least once.
Rational Welfare(const CoveringProblem& problem, const Allocation& allocation);
double FastWelfare(const CoveringProblem& problem, const Allocation& allocation);
Rational TotalValue(const CoveringProblem& problem);

// Largest number of agents that can select one resource at the same time.
int Cardinality(const CoveringProblem& problem);

// sum over r in the agent's action of v_r f(|a|_r).
Rational Utility(const CoveringProblem& problem, const DistributionRule& rule,
                 int agent, const Allocation& allocation);
// Same with rule alg(x_r, n) on resource r.
Rational UtilityLearning(const CoveringProblem& problem,
                         const LearningRules& rules,
                         const ResourceCounters& counters, int agent,
                         const Allocation& allocation);

// ---------------------------------------------------------------------------
// Numeric modes. Rational is exact; double compares with a relative
// tolerance of 1e-9 when deciding whether a deviation strictly improves.

template <typename T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

inline constexpr double kFastTieTolerance = 1e-9;

template <Scalar T>
T ScalarFrom(const Rational& value) {
  if constexpr (std::same_as<T, Rational>) {
    return value;
  } else {
    return value.ToDouble();
  }
}

template <Scalar T>
T ResourceValue(const CoveringProblem& problem, ResourceIndex r) {
  if constexpr (std::same_as<T, Rational>) {
    return problem.value(r);
  } else {
    return problem.fast_value(r);
  }
}

template <Scalar T>
bool StrictlyGreater(const T& a, const T& b) {
  if constexpr (std::same_as<T, Rational>) {
    return a > b;
  } else {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return a - b > kFastTieTolerance * scale;
  }
}

// f(x_r, j): the share of resource r when j agents cover it. Either one rule
// for every resource, or a per-resource choice among a family of rules.
template <Scalar T>
class RuleAccessor {
 public:
  static RuleAccessor Fixed(const DistributionRule& rule) {
    RuleAccessor accessor;
    accessor.tables_.push_back(ToTable(rule));
    return accessor;
  }

  // Resource r uses rules.ForCounter(counters[r]).
  static RuleAccessor Learning(const LearningRules& rules,
                               const ResourceCounters& counters) {
    RuleAccessor accessor;
    for (int l = 1; l <= rules.max_level(); ++l) {
      accessor.tables_.push_back(ToTable(rules.ForCounter(l)));
    }
    accessor.selector_.resize(counters.size());
    for (std::size_t r = 0; r < counters.size(); ++r) {
      accessor.SetCounter(static_cast<ResourceIndex>(r), counters[r]);
    }
    return accessor;
  }

  bool per_resource() const { return !selector_.empty(); }

  void SetCounter(ResourceIndex r, int counter) {
    if (counter < 0 || counter > static_cast<int>(tables_.size())) {
      throw ArgumentError("counter " + std::to_string(counter) +
                          " has no learning rule");
    }
    selector_[r] = counter == 0 ? 0 : counter - 1;
  }

  const T& Share(ResourceIndex r, int count) const {
    const auto& table = selector_.empty() ? tables_[0] : tables_[selector_[r]];
    if (count < 1 || count > static_cast<int>(table.size())) {
      throw DomainLengthError("rule queried at occupancy " +
                              std::to_string(count) + " beyond its length " +
                              std::to_string(table.size()));
    }
    return table[count - 1];
  }

 private:
  static std::vector<T> ToTable(const DistributionRule& rule) {
    std::vector<T> table;
    table.reserve(rule.length());
    for (const auto& v : rule.values()) table.push_back(ScalarFrom<T>(v));
    return table;
  }

  std::vector<std::vector<T>> tables_;
  std::vector<int> selector_;
};

template <Scalar T>
T UtilityOf(const CoveringProblem& problem, const RuleAccessor<T>& rules,
            int agent, const Allocation& allocation);

// A utility-maximising action for `agent` with everyone else fixed. Keeps the
// current action whenever it attains the maximum; otherwise the first
// maximiser in declared order (explicit sets) or the top-capacity set of
// strictly positive marginals, ties to smaller resource index (capacity sets).
template <Scalar T>
Action BestResponse(const CoveringProblem& problem, const RuleAccessor<T>& rules,
                    int agent, const Allocation& allocation);
// As above with precomputed coverage counts of `allocation`.
template <Scalar T>
Action BestResponse(const CoveringProblem& problem, const RuleAccessor<T>& rules,
                    int agent, const Allocation& allocation,
                    const ResourceCounters& coverage);

// Highest utility any feasible action of `agent` achieves against the rest.
template <Scalar T>
T BestResponseValue(const CoveringProblem& problem,
                    const RuleAccessor<T>& rules, int agent,
                    const Allocation& allocation);

// No agent has a strictly improving unilateral deviation.
template <Scalar T>
bool IsNash(const CoveringProblem& problem, const RuleAccessor<T>& rules,
            const Allocation& allocation);

// sum_r v_r sum_{j=1}^{|a|_r} f(x_r, j).
template <Scalar T>
T Potential(const CoveringProblem& problem, const RuleAccessor<T>& rules,
            const Allocation& allocation);

}  // namespace covering

#endif  // COVERING_GAME_HPP_
