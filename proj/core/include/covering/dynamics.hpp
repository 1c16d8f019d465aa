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

#ifndef COVERING_DYNAMICS_HPP_
#define COVERING_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "covering/game.hpp"
#include "covering/rules.hpp"

namespace covering {

// Turn order. Agent indices are 0-based.
struct RoundRobin {
  int offset = 0;  // turn t goes to (offset + t) mod n
};
struct RandomUniform {
  std::uint64_t seed = 0;
};
struct CustomPermutation {
  std::vector<int> order;  // repeated cyclically; must mention every agent
};
using Schedule = std::variant<RoundRobin, RandomUniform, CustomPermutation>;

// "round-robin[:OFFSET]" (OFFSET shifts the start: 0 begins with the first
// agent), "random:SEED", or "perm:i1,i2,..." listing 1-based agent numbers.
// Throws ArgumentError.
Schedule ParseSchedule(std::string_view text, int num_agents);
std::string ScheduleToString(const Schedule& schedule);

// Which rule a dynamics run uses.
//   optimal        f*_k with k = cardinality of the instance
//   optimal:K      f*_K
//   risky:P:KBAR   f'_P on [1, KBAR]
//   alg:L:N        fixed alg rule
//   learning       per-resource rules driven by visit counters
struct RuleSpec {
  enum class Kind { kOptimal, kRisky, kAlg, kLearning };
  Kind kind = Kind::kOptimal;
  int first = 0;   // K, P or L; 0 for "optimal" means instance cardinality
  int second = 0;  // KBAR or N

  bool is_learning() const { return kind == Kind::kLearning; }
  std::string ToString() const;
};

// `default_kbar` completes "risky:P"; 0 makes the short form an error.
RuleSpec ParseRuleSpec(std::string_view text, int default_kbar = 0);
// Fixed rule for the problem, constantly extended to its cardinality when
// shorter. Throws ArgumentError for learning specs.
DistributionRule MaterializeRule(const RuleSpec& spec,
                                 const CoveringProblem& problem);

enum class RunStatus { kConverged, kConvergenceCapExceeded };

struct DynamicsStep {
  long t = 0;
  int agent = 0;
  Action before;
  Action after;
  ResourceCounters counters;  // after the step; empty for fixed-rule runs
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  Allocation final_allocation;
  ResourceCounters final_counters;
  bool converged = false;
  RunStatus status = RunStatus::kConvergenceCapExceeded;
  long rounds = 0;   // passes over the agents, including the quiet last one
  long turns = 0;
  long changes = 0;  // turns where the acting agent switched action
  int k_m = 0;       // max final counter
};

struct DynamicsOptions {
  long max_rounds = 10000;
  bool record_steps = true;
};

// Single-agent best responses under one fixed rule until a full pass changes
// nothing. final_counters holds the final coverage.
template <Scalar T>
DynamicsTrace RunBestResponse(const CoveringProblem& problem,
                              const DistributionRule& rule, Allocation initial,
                              const Schedule& schedule,
                              const DynamicsOptions& options = {});

// Asynchronous cardinality learning: every resource carries the largest
// number of agents seen on it so far, x_r, and pays according to
// AlgRule(x_r, n). Stops when a full pass changes neither the allocation nor
// any counter.
template <Scalar T>
DynamicsTrace RunLearning(const CoveringProblem& problem, Allocation initial,
                          const Schedule& schedule,
                          const DynamicsOptions& options = {});

// First declared action per agent (explicit) or the `capacity` most valuable
// accessible resources with positive value, ties to smaller index.
Allocation DefaultInitial(const CoveringProblem& problem);
// Uniform action (explicit) or uniform subset of size min(capacity, |R_i|).
Allocation RandomInitial(const CoveringProblem& problem, std::uint64_t seed);

// Quality certificate for a converged learning run:
//   W(a_e)/W(a_opt) >= poa(f*_{k_m}, k_m) >= poa(f*_k, k).
struct EquilibriumBound {
  Rational ratio;
  Rational poa_km;
  Rational poa_k;
  int k_m = 1;
  int k = 1;
  bool holds = false;
};

// Ratio is 1 when optimal_welfare is zero. Throws ArgumentError for
// unconverged traces.
EquilibriumBound CheckEquilibriumBound(const CoveringProblem& problem,
                                       const DynamicsTrace& trace,
                                       const Rational& optimal_welfare);

}  // namespace covering

#endif  // COVERING_DYNAMICS_HPP_
