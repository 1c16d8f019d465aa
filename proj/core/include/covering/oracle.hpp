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

#ifndef COVERING_ORACLE_HPP_
#define COVERING_ORACLE_HPP_

// Brute-force ground truth for small covering problems: exhaustive optimum,
// every pure Nash equilibrium, and learning runs from every initial state.
// Everything is exact and refuses (SizeCapExceeded) rather than sample.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "covering/dynamics.hpp"
#include "covering/game.hpp"

namespace covering {

struct OracleOptions {
  std::uint64_t max_joint_allocations = 1'000'000;
  // Capacity-form action sets are expanded only up to this many accessible
  // resources.
  int max_capacity_expansion = 12;
};

// Every feasible action of each agent: explicit lists in declared order,
// capacity sets as all subsets of size <= capacity in lexicographic order.
std::vector<std::vector<Action>> FeasibleActions(
    const CoveringProblem& problem, const OracleOptions& options = {});

std::uint64_t CountJointAllocations(const CoveringProblem& problem,
                                    const OracleOptions& options = {});

// Visits every joint allocation once, first agent most significant.
void ForEachJointAllocation(const CoveringProblem& problem,
                            const std::function<void(const Allocation&)>& visit,
                            const OracleOptions& options = {});
std::vector<Allocation> EnumerateJointAllocations(
    const CoveringProblem& problem, const OracleOptions& options = {});

struct OptimalResult {
  Rational welfare;
  Allocation allocation;  // first maximiser in enumeration order
};
OptimalResult OptimalAllocation(const CoveringProblem& problem,
                                const OracleOptions& options = {});

struct NashEntry {
  Allocation allocation;
  Rational welfare;
};

struct OracleReport {
  Rational optimal_welfare;
  std::vector<Allocation> optimal_allocations;
  std::vector<NashEntry> nash;
  Rational worst_nash_welfare;
  Rational worst_ratio;  // 1 when the optimum is 0
};

OracleReport AllNash(const CoveringProblem& problem,
                     const RuleAccessor<Rational>& rules,
                     const OracleOptions& options = {});

struct LearningOutcome {
  Allocation initial;
  std::string schedule;
  Allocation final_allocation;
  Rational final_welfare;
  bool converged = false;
  int k_m = 0;
};

// Runs learning from every joint allocation under every schedule (round-robin
// with every offset when `schedules` is empty). Deterministic schedules only.
std::vector<LearningOutcome> LearningOverAllInitials(
    const CoveringProblem& problem, std::span<const Schedule> schedules = {},
    const OracleOptions& options = {});

struct SmallInstanceBounds {
  int max_agents = 5;
  int max_resources = 6;
  int max_actions = 4;
  int max_value = 20;
};

// Seeded explicit-form instance with integer values in [0, max_value].
CoveringProblem RandomSmallInstance(std::uint64_t seed,
                                    const SmallInstanceBounds& bounds = {});

// Three agents choosing one resource each from {r1,r2,r3}, {r2,r3,r4},
// {r1,r2,r3,r4}. Values must satisfy v1 > v3 > v4 > v2 and
// v1 f*_3(2) < v2 < v1 f*_2(2) < v4; default (11, 5, 7, 6).
CoveringProblem CounterexampleOne(std::span<const Rational> values = {});
// Three agents choosing one resource each from {r1,r2}, {r2,r3},
// {r1,r2,r3}. Values must satisfy v3 f*_3(2) < v1 < v2 < v3/2;
// default (9, 9.5, 20).
CoveringProblem CounterexampleTwo(std::span<const Rational> values = {});

// "counterexample-i" or "counterexample-ii".
CoveringProblem BuiltinInstance(std::string_view name);

}  // namespace covering

#endif  // COVERING_ORACLE_HPP_
