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

#include "covering/oracle.hpp"

#include <algorithm>

#include "covering/random.hpp"

namespace covering {
namespace {

void SubsetsUpTo(const Action& pool, int capacity, std::size_t start,
                 Action& current, std::vector<Action>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == capacity) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    SubsetsUpTo(pool, capacity, i + 1, current, out);
    current.pop_back();
  }
}

std::uint64_t CheckedProduct(const std::vector<std::vector<Action>>& actions,
                             std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const auto& list : actions) {
    total *= list.size();
    if (total > cap) {
      throw SizeCapExceeded("more than " + std::to_string(cap) +
                            " joint allocations");
    }
  }
  return total;
}

std::vector<Rational> ValuesOrDefault(std::span<const Rational> values,
                                      std::vector<Rational> fallback,
                                      const char* name) {
  if (values.empty()) return fallback;
  if (values.size() != fallback.size()) {
    throw ArgumentError(std::string(name) + " needs exactly " +
                        std::to_string(fallback.size()) + " values");
  }
  return {values.begin(), values.end()};
}

CoveringProblem SingletonChoiceProblem(
    const std::vector<Rational>& values,
    const std::vector<std::vector<ResourceIndex>>& choices) {
  std::vector<Resource> resources;
  for (std::size_t r = 0; r < values.size(); ++r) {
    resources.push_back({"r" + std::to_string(r + 1), values[r]});
  }
  std::vector<ActionSet> sets;
  for (const auto& reachable : choices) {
    ExplicitActions set;
    for (ResourceIndex r : reachable) set.actions.push_back({r});
    sets.emplace_back(std::move(set));
  }
  return CoveringProblem(DefaultAgentIds(static_cast<int>(choices.size())),
                         std::move(resources), std::move(sets));
}

}  // namespace

std::vector<std::vector<Action>> FeasibleActions(const CoveringProblem& problem,
                                                 const OracleOptions& options) {
  std::vector<std::vector<Action>> out;
  out.reserve(problem.num_agents());
  for (int i = 0; i < problem.num_agents(); ++i) {
    if (const auto* set = std::get_if<ExplicitActions>(&problem.action_set(i))) {
      out.push_back(set->actions);
      continue;
    }
    const auto& cap = std::get<CapacityActions>(problem.action_set(i));
    if (static_cast<int>(cap.accessible.size()) > options.max_capacity_expansion) {
      throw SizeCapExceeded("agent '" + problem.agent_id(i) + "' can reach " +
                            std::to_string(cap.accessible.size()) +
                            " resources; enumeration is limited to " +
                            std::to_string(options.max_capacity_expansion));
    }
    std::vector<Action> subsets;
    Action current;
    SubsetsUpTo(cap.accessible, cap.capacity, 0, current, subsets);
    out.push_back(std::move(subsets));
  }
  return out;
}

std::uint64_t CountJointAllocations(const CoveringProblem& problem,
                                    const OracleOptions& options) {
  return CheckedProduct(FeasibleActions(problem, options),
                        options.max_joint_allocations);
}

void ForEachJointAllocation(const CoveringProblem& problem,
                            const std::function<void(const Allocation&)>& visit,
                            const OracleOptions& options) {
  const auto actions = FeasibleActions(problem, options);
  CheckedProduct(actions, options.max_joint_allocations);
  const int n = problem.num_agents();
  std::vector<std::size_t> digit(n, 0);
  Allocation allocation(n);
  for (int i = 0; i < n; ++i) allocation[i] = actions[i][0];
  while (true) {
    visit(allocation);
    int i = n - 1;
    while (i >= 0 && digit[i] + 1 == actions[i].size()) {
      digit[i] = 0;
      allocation[i] = actions[i][0];
      --i;
    }
    if (i < 0) return;
    ++digit[i];
    allocation[i] = actions[i][digit[i]];
  }
}

std::vector<Allocation> EnumerateJointAllocations(const CoveringProblem& problem,
                                                  const OracleOptions& options) {
  std::vector<Allocation> out;
  ForEachJointAllocation(
      problem, [&](const Allocation& a) { out.push_back(a); }, options);
  return out;
}

OptimalResult OptimalAllocation(const CoveringProblem& problem,
                                const OracleOptions& options) {
  OptimalResult best;
  bool first = true;
  ForEachJointAllocation(
      problem,
      [&](const Allocation& a) {
        Rational w = Welfare(problem, a);
        if (first || w > best.welfare) {
          best.welfare = std::move(w);
          best.allocation = a;
          first = false;
        }
      },
      options);
  return best;
}

OracleReport AllNash(const CoveringProblem& problem,
                     const RuleAccessor<Rational>& rules,
                     const OracleOptions& options) {
  OracleReport report;
  bool first = true;
  ForEachJointAllocation(
      problem,
      [&](const Allocation& a) {
        Rational w = Welfare(problem, a);
        if (first || w > report.optimal_welfare) {
          report.optimal_welfare = w;
          report.optimal_allocations.clear();
        }
        if (w == report.optimal_welfare) report.optimal_allocations.push_back(a);
        first = false;
        if (IsNash(problem, rules, a)) report.nash.push_back({a, std::move(w)});
      },
      options);
  if (report.nash.empty()) {
    // Cannot happen for the potential games built here.
    throw ArgumentError("no pure Nash equilibrium found");
  }
  report.worst_nash_welfare =
      std::min_element(report.nash.begin(), report.nash.end(),
                       [](const NashEntry& a, const NashEntry& b) {
                         return a.welfare < b.welfare;
                       })
          ->welfare;
  report.worst_ratio = report.optimal_welfare.is_zero()
                           ? Rational(1)
                           : report.worst_nash_welfare / report.optimal_welfare;
  return report;
}

std::vector<LearningOutcome> LearningOverAllInitials(
    const CoveringProblem& problem, std::span<const Schedule> schedules,
    const OracleOptions& options) {
  std::vector<Schedule> family(schedules.begin(), schedules.end());
  if (family.empty()) {
    for (int offset = 0; offset < problem.num_agents(); ++offset) {
      family.push_back(RoundRobin{offset});
    }
  }
  for (const Schedule& s : family) {
    if (std::holds_alternative<RandomUniform>(s)) {
      throw ArgumentError("learning sweep accepts deterministic schedules only");
    }
  }
  DynamicsOptions run_options;
  run_options.record_steps = false;
  std::vector<LearningOutcome> outcomes;
  ForEachJointAllocation(
      problem,
      [&](const Allocation& initial) {
        for (const Schedule& s : family) {
          DynamicsTrace trace = RunLearning<Rational>(problem, initial, s, run_options);
          LearningOutcome outcome;
          outcome.initial = initial;
          outcome.schedule = ScheduleToString(s);
          outcome.final_welfare = Welfare(problem, trace.final_allocation);
          outcome.final_allocation = std::move(trace.final_allocation);
          outcome.converged = trace.converged;
          outcome.k_m = trace.k_m;
          outcomes.push_back(std::move(outcome));
        }
      },
      options);
  return outcomes;
}

CoveringProblem RandomSmallInstance(std::uint64_t seed,
                                    const SmallInstanceBounds& bounds) {
  if (bounds.max_agents < 1 || bounds.max_resources < 1 ||
      bounds.max_actions < 1 || bounds.max_value < 0 ||
      bounds.max_resources > 30) {
    throw ArgumentError("invalid small instance bounds");
  }
  Xoshiro256 rng(seed);
  const int n = 1 + static_cast<int>(rng.NextBelow(bounds.max_agents));
  const int m = 1 + static_cast<int>(rng.NextBelow(bounds.max_resources));
  std::vector<Resource> resources;
  for (int r = 0; r < m; ++r) {
    resources.push_back({"r" + std::to_string(r + 1),
                         Rational(static_cast<long>(
                             rng.NextBelow(bounds.max_value + 1)))});
  }
  std::vector<ActionSet> sets;
  for (int i = 0; i < n; ++i) {
    const int count = 1 + static_cast<int>(rng.NextBelow(bounds.max_actions));
    ExplicitActions set;
    for (int a = 0; a < count; ++a) {
      const std::uint64_t mask = rng.NextBelow(std::uint64_t{1} << m);
      Action action;
      for (int r = 0; r < m; ++r) {
        if (mask & (std::uint64_t{1} << r)) action.push_back(r);
      }
      if (std::find(set.actions.begin(), set.actions.end(), action) ==
          set.actions.end()) {
        set.actions.push_back(std::move(action));
      }
    }
    sets.emplace_back(std::move(set));
  }
  return CoveringProblem(DefaultAgentIds(n), std::move(resources),
                         std::move(sets));
}

CoveringProblem CounterexampleOne(std::span<const Rational> values) {
  const auto v = ValuesOrDefault(values, {11, 5, 7, 6}, "counterexample-i");
  const Rational f3 = OptimalRule(3)[2];
  const Rational f2 = OptimalRule(2)[2];
  if (!(v[0] > v[2] && v[2] > v[3] && v[3] > v[1])) {
    throw ArgumentError("counterexample-i needs v1 > v3 > v4 > v2");
  }
  if (!(v[0] * f3 < v[1] && v[1] < v[0] * f2 && v[0] * f2 < v[3])) {
    throw ArgumentError(
        "counterexample-i needs v1 f*_3(2) < v2 < v1 f*_2(2) < v4");
  }
  return SingletonChoiceProblem(v, {{0, 1, 2}, {1, 2, 3}, {0, 1, 2, 3}});
}

CoveringProblem CounterexampleTwo(std::span<const Rational> values) {
  const auto v = ValuesOrDefault(
      values, {9, Rational::FromDecimal("9.5"), 20}, "counterexample-ii");
  const Rational f3 = OptimalRule(3)[2];
  if (!(v[2] * f3 < v[0] && v[0] < v[1] && v[1] < v[2] / Rational(2))) {
    throw ArgumentError("counterexample-ii needs v3 f*_3(2) < v1 < v2 < v3/2");
  }
  return SingletonChoiceProblem(v, {{0, 1}, {1, 2}, {0, 1, 2}});
}

CoveringProblem BuiltinInstance(std::string_view name) {
  if (name == "counterexample-i") return CounterexampleOne();
  if (name == "counterexample-ii") return CounterexampleTwo();
  throw ArgumentError("unknown builtin instance '" + std::string(name) + "'");
}

}  // namespace covering
