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

#include "covering/dynamics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "covering/random.hpp"

namespace covering {
namespace {

template <typename Int>
Int ParseInteger(std::string_view text, std::string_view what) {
  Int value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ArgumentError("expected an integer for " + std::string(what) +
                        ", got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Picks the acting agent for each turn and knows how many quiet turns
// certify convergence.
class TurnOrder {
 public:
  TurnOrder(const Schedule& schedule, int num_agents)
      : schedule_(schedule), num_agents_(num_agents), rng_(0) {
    if (const auto* rr = std::get_if<RoundRobin>(&schedule_)) {
      offset_ = ((rr->offset % num_agents) + num_agents) % num_agents;
      pass_length_ = num_agents;
      quiet_needed_ = num_agents;
    } else if (const auto* random = std::get_if<RandomUniform>(&schedule_)) {
      rng_ = Xoshiro256(random->seed);
      pass_length_ = num_agents;
      quiet_needed_ = 20L * num_agents;
    } else {
      const auto& perm = std::get<CustomPermutation>(schedule_);
      std::vector<bool> seen(num_agents, false);
      for (int agent : perm.order) {
        if (agent < 0 || agent >= num_agents) {
          throw ArgumentError("schedule names agent " + std::to_string(agent + 1) +
                              " of " + std::to_string(num_agents));
        }
        seen[agent] = true;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ArgumentError("permutation schedule must include every agent");
      }
      pass_length_ = static_cast<long>(perm.order.size());
      quiet_needed_ = pass_length_;
    }
  }

  int Agent(long t) {
    if (std::holds_alternative<RoundRobin>(schedule_)) {
      return static_cast<int>((offset_ + t) % num_agents_);
    }
    if (std::holds_alternative<RandomUniform>(schedule_)) {
      return static_cast<int>(rng_.NextBelow(num_agents_));
    }
    const auto& order = std::get<CustomPermutation>(schedule_).order;
    return order[t % static_cast<long>(order.size())];
  }

  long pass_length() const { return pass_length_; }
  long quiet_needed() const { return quiet_needed_; }

 private:
  Schedule schedule_;
  int num_agents_;
  long offset_ = 0;
  long pass_length_ = 1;
  long quiet_needed_ = 1;
  Xoshiro256 rng_;
};

template <Scalar T>
DynamicsTrace Run(const CoveringProblem& problem, RuleAccessor<T> rules,
                  bool learning, Allocation allocation,
                  const Schedule& schedule, const DynamicsOptions& options) {
  CheckFeasible(problem, allocation);
  if (options.max_rounds < 1) throw ArgumentError("max_rounds must be >= 1");
  TurnOrder order(schedule, problem.num_agents());
  ResourceCounters coverage = CoverageCounts(problem, allocation);
  ResourceCounters counters = learning ? coverage : ResourceCounters{};

  DynamicsTrace trace;
  const long max_turns = options.max_rounds * order.pass_length();
  long quiet = 0;
  long t = 0;
  while (t < max_turns) {
    const int agent = order.Agent(t);
    Action response = BestResponse(problem, rules, agent, allocation, coverage);
    const bool changed = response != allocation[agent];
    bool counters_changed = false;
    DynamicsStep step;
    if (options.record_steps) {
      step.t = t;
      step.agent = agent;
      step.before = allocation[agent];
    }
    if (changed) {
      for (ResourceIndex r : allocation[agent]) --coverage[r];
      for (ResourceIndex r : response) ++coverage[r];
      allocation[agent] = std::move(response);
      ++trace.changes;
      if (learning) {
        for (ResourceIndex r : allocation[agent]) {
          if (coverage[r] > counters[r]) {
            counters[r] = coverage[r];
            rules.SetCounter(r, counters[r]);
            counters_changed = true;
          }
        }
      }
    }
    if (options.record_steps) {
      step.after = allocation[agent];
      step.counters = counters;
      trace.steps.push_back(std::move(step));
    }
    ++t;
    quiet = (changed || counters_changed) ? 0 : quiet + 1;
    if (quiet >= order.quiet_needed()) {
      trace.converged = true;
      break;
    }
  }

  trace.turns = t;
  trace.rounds = (t + order.pass_length() - 1) / order.pass_length();
  trace.status = trace.converged ? RunStatus::kConverged
                                 : RunStatus::kConvergenceCapExceeded;
  trace.final_counters = learning ? std::move(counters) : coverage;
  trace.final_allocation = std::move(allocation);
  trace.k_m = trace.final_counters.empty()
                  ? 0
                  : *std::max_element(trace.final_counters.begin(),
                                      trace.final_counters.end());
  return trace;
}

}  // namespace

Schedule ParseSchedule(std::string_view text, int num_agents) {
  if (num_agents < 1) throw ArgumentError("schedule needs at least one agent");
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "round-robin") {
    RoundRobin rr;
    if (colon != std::string_view::npos) {
      rr.offset = ParseInteger<int>(arg, "round-robin offset");
      if (rr.offset < 0) throw ArgumentError("round-robin offset must be >= 0");
    }
    return rr;
  }
  if (kind == "random") {
    if (colon == std::string_view::npos) {
      throw ArgumentError("random schedule needs a seed: random:SEED");
    }
    return RandomUniform{ParseInteger<std::uint64_t>(arg, "random seed")};
  }
  if (kind == "perm") {
    if (colon == std::string_view::npos || arg.empty()) {
      throw ArgumentError("perm schedule needs agents: perm:i1,i2,...");
    }
    CustomPermutation perm;
    for (std::string_view part : Split(arg, ',')) {
      const int agent = ParseInteger<int>(part, "perm agent");
      if (agent < 1 || agent > num_agents) {
        throw ArgumentError("perm agent " + std::string(part) + " outside [1, " +
                            std::to_string(num_agents) + "]");
      }
      perm.order.push_back(agent - 1);
    }
    TurnOrder check(perm, num_agents);  // validates coverage of all agents
    (void)check;
    return perm;
  }
  throw ArgumentError("unknown schedule '" + std::string(text) + "'");
}

std::string ScheduleToString(const Schedule& schedule) {
  if (const auto* rr = std::get_if<RoundRobin>(&schedule)) {
    return "round-robin:" + std::to_string(rr->offset);
  }
  if (const auto* random = std::get_if<RandomUniform>(&schedule)) {
    return "random:" + std::to_string(random->seed);
  }
  std::string out = "perm:";
  const auto& order = std::get<CustomPermutation>(schedule).order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(order[i] + 1);
  }
  return out;
}

std::string RuleSpec::ToString() const {
  switch (kind) {
    case Kind::kOptimal:
      return first == 0 ? "optimal" : "optimal:" + std::to_string(first);
    case Kind::kRisky:
      return "risky:" + std::to_string(first) + ":" + std::to_string(second);
    case Kind::kAlg:
      return "alg:" + std::to_string(first) + ":" + std::to_string(second);
    case Kind::kLearning:
      return "learning";
  }
  return "?";
}

RuleSpec ParseRuleSpec(std::string_view text, int default_kbar) {
  const std::vector<std::string_view> parts = Split(text, ':');
  const std::string_view kind = parts[0];
  RuleSpec spec;
  if (kind == "learning" && parts.size() == 1) {
    spec.kind = RuleSpec::Kind::kLearning;
    return spec;
  }
  if (kind == "optimal" && parts.size() <= 2) {
    spec.kind = RuleSpec::Kind::kOptimal;
    if (parts.size() == 2) {
      spec.first = ParseInteger<int>(parts[1], "optimal K");
      if (spec.first < 1) throw ArgumentError("optimal:K needs K >= 1");
    }
    return spec;
  }
  if (kind == "risky" && (parts.size() == 3 ||
                          (parts.size() == 2 && default_kbar > 0))) {
    spec.kind = RuleSpec::Kind::kRisky;
    spec.first = ParseInteger<int>(parts[1], "risky P");
    spec.second = parts.size() == 3 ? ParseInteger<int>(parts[2], "risky KBAR")
                                    : default_kbar;
    if (spec.first <= 1 || spec.first >= spec.second) {
      throw ArgumentError("risky:P:KBAR needs 1 < P < KBAR");
    }
    return spec;
  }
  if (kind == "alg" && parts.size() == 3) {
    spec.kind = RuleSpec::Kind::kAlg;
    spec.first = ParseInteger<int>(parts[1], "alg L");
    spec.second = ParseInteger<int>(parts[2], "alg N");
    if (spec.first < 1 || spec.first > spec.second) {
      throw ArgumentError("alg:L:N needs 1 <= L <= N");
    }
    return spec;
  }
  throw ArgumentError("unknown rule '" + std::string(text) +
                      "' (expected optimal[:K], risky:P:KBAR, alg:L:N or learning)");
}

DistributionRule MaterializeRule(const RuleSpec& spec,
                                 const CoveringProblem& problem) {
  const int k = Cardinality(problem);
  switch (spec.kind) {
    case RuleSpec::Kind::kOptimal: {
      const int level = spec.first == 0 ? k : spec.first;
      return OptimalRule(level, std::max(level, k));
    }
    case RuleSpec::Kind::kRisky:
      return RiskyRule(spec.first, spec.second).ExtendedTo(k);
    case RuleSpec::Kind::kAlg:
      return AlgRule(spec.first, spec.second).ExtendedTo(k);
    case RuleSpec::Kind::kLearning:
      break;
  }
  throw ArgumentError("the learning rule is not a single distribution rule");
}

template <Scalar T>
DynamicsTrace RunBestResponse(const CoveringProblem& problem,
                              const DistributionRule& rule, Allocation initial,
                              const Schedule& schedule,
                              const DynamicsOptions& options) {
  return Run<T>(problem,
                RuleAccessor<T>::Fixed(rule.ExtendedTo(Cardinality(problem))),
                /*learning=*/false, std::move(initial), schedule, options);
}

template <Scalar T>
DynamicsTrace RunLearning(const CoveringProblem& problem, Allocation initial,
                          const Schedule& schedule,
                          const DynamicsOptions& options) {
  CheckFeasible(problem, initial);
  const LearningRules family(problem.num_agents(), Cardinality(problem));
  RuleAccessor<T> rules =
      RuleAccessor<T>::Learning(family, CoverageCounts(problem, initial));
  return Run<T>(problem, std::move(rules), /*learning=*/true,
                std::move(initial), schedule, options);
}

template DynamicsTrace RunBestResponse<Rational>(const CoveringProblem&,
                                                 const DistributionRule&,
                                                 Allocation, const Schedule&,
                                                 const DynamicsOptions&);
template DynamicsTrace RunBestResponse<double>(const CoveringProblem&,
                                               const DistributionRule&,
                                               Allocation, const Schedule&,
                                               const DynamicsOptions&);
template DynamicsTrace RunLearning<Rational>(const CoveringProblem&, Allocation,
                                             const Schedule&,
                                             const DynamicsOptions&);
template DynamicsTrace RunLearning<double>(const CoveringProblem&, Allocation,
                                           const Schedule&,
                                           const DynamicsOptions&);

Allocation DefaultInitial(const CoveringProblem& problem) {
  Allocation allocation;
  allocation.reserve(problem.num_agents());
  for (int i = 0; i < problem.num_agents(); ++i) {
    if (const auto* set = std::get_if<ExplicitActions>(&problem.action_set(i))) {
      allocation.push_back(set->actions.front());
      continue;
    }
    const auto& cap = std::get<CapacityActions>(problem.action_set(i));
    std::vector<ResourceIndex> candidates;
    for (ResourceIndex r : cap.accessible) {
      if (problem.value(r).sign() > 0) candidates.push_back(r);
    }
    const std::size_t take =
        std::min<std::size_t>(candidates.size(), cap.capacity);
    std::partial_sort(candidates.begin(), candidates.begin() + take,
                      candidates.end(), [&](ResourceIndex a, ResourceIndex b) {
                        if (problem.value(a) != problem.value(b)) {
                          return problem.value(a) > problem.value(b);
                        }
                        return a < b;
                      });
    candidates.resize(take);
    allocation.push_back(NormalizeAction(std::move(candidates)));
  }
  return allocation;
}

Allocation RandomInitial(const CoveringProblem& problem, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  Allocation allocation;
  allocation.reserve(problem.num_agents());
  for (int i = 0; i < problem.num_agents(); ++i) {
    if (const auto* set = std::get_if<ExplicitActions>(&problem.action_set(i))) {
      allocation.push_back(set->actions[rng.NextBelow(set->actions.size())]);
      continue;
    }
    const auto& cap = std::get<CapacityActions>(problem.action_set(i));
    Action pool = cap.accessible;
    const std::size_t take = std::min<std::size_t>(pool.size(), cap.capacity);
    // Partial Fisher-Yates.
    for (std::size_t j = 0; j < take; ++j) {
      const std::size_t pick = j + rng.NextBelow(pool.size() - j);
      std::swap(pool[j], pool[pick]);
    }
    pool.resize(take);
    allocation.push_back(NormalizeAction(std::move(pool)));
  }
  return allocation;
}

EquilibriumBound CheckEquilibriumBound(const CoveringProblem& problem,
                                       const DynamicsTrace& trace,
                                       const Rational& optimal_welfare) {
  if (!trace.converged) {
    throw ArgumentError("equilibrium bound needs a converged run");
  }
  EquilibriumBound bound;
  bound.k = Cardinality(problem);
  bound.k_m = std::max(trace.k_m, 1);
  bound.ratio = optimal_welfare.is_zero()
                    ? Rational(1)
                    : Welfare(problem, trace.final_allocation) / optimal_welfare;
  bound.poa_km = OptimalPoa(bound.k_m);
  bound.poa_k = OptimalPoa(bound.k);
  bound.holds = bound.ratio >= bound.poa_km && bound.poa_km >= bound.poa_k;
  return bound;
}

}  // namespace covering
