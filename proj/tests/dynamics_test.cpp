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

#include <gtest/gtest.h>

#include "covering/errors.hpp"
#include "covering/oracle.hpp"
#include "test_util.hpp"

namespace covering {
namespace {

using testing::Q;
using testing::Qs;
using testing::Singletons;
using testing::SingletonGame;

using Exact = RuleAccessor<Rational>;

TEST(ScheduleTest, Parses) {
  EXPECT_EQ(std::get<RoundRobin>(ParseSchedule("round-robin", 3)).offset, 0);
  EXPECT_EQ(std::get<RoundRobin>(ParseSchedule("round-robin:2", 3)).offset, 2);
  EXPECT_EQ(std::get<RandomUniform>(ParseSchedule("random:99", 3)).seed, 99u);
  EXPECT_EQ(std::get<CustomPermutation>(ParseSchedule("perm:3,1,2", 3)).order,
            (std::vector<int>{2, 0, 1}));
  for (const char* text : {"round-robin:2", "random:99", "perm:3,1,2,1"}) {
    EXPECT_EQ(ScheduleToString(ParseSchedule(text, 3)), text);
  }
  for (const char* bad : {"", "sideways", "random", "random:x", "perm:", "perm:1,2",
                          "perm:1,2,4", "round-robin:-1", "perm:0,1,2"}) {
    EXPECT_THROW(ParseSchedule(bad, 3), ArgumentError) << bad;
  }
}

TEST(RuleSpecTest, Parses) {
  EXPECT_EQ(ParseRuleSpec("optimal").ToString(), "optimal");
  EXPECT_EQ(ParseRuleSpec("optimal:5").first, 5);
  EXPECT_EQ(ParseRuleSpec("risky:2:6").ToString(), "risky:2:6");
  EXPECT_EQ(ParseRuleSpec("risky:2", 5).ToString(), "risky:2:5");
  EXPECT_EQ(ParseRuleSpec("alg:2:4").ToString(), "alg:2:4");
  EXPECT_TRUE(ParseRuleSpec("learning").is_learning());
  for (const char* bad : {"", "risky:2", "risky:3:3", "optimal:0", "alg:3:2",
                          "learning:2", "fancy"}) {
    EXPECT_THROW(ParseRuleSpec(bad), ArgumentError) << bad;
  }
}

TEST(RuleSpecTest, MaterializesForTheInstance) {
  const CoveringProblem p = CounterexampleTwo();
  EXPECT_EQ(MaterializeRule(ParseRuleSpec("optimal"), p), OptimalRule(3));
  EXPECT_EQ(MaterializeRule(ParseRuleSpec("optimal:2"), p),
            DistributionRule(Qs({1, Q(1, 2), Q(1, 2)})));
  EXPECT_EQ(MaterializeRule(ParseRuleSpec("optimal:5"), p).length(), 5);
  EXPECT_EQ(MaterializeRule(ParseRuleSpec("risky:2:6"), p), RiskyRule(2, 6));
  EXPECT_THROW(MaterializeRule(ParseRuleSpec("learning"), p), ArgumentError);
}

TEST(RunLearningTest, SecondCounterexampleScheduledRun) {
  const CoveringProblem p = CounterexampleTwo();
  const DynamicsTrace trace = RunLearning<Rational>(
      p, Singletons(p, {"r2", "r3", "r1"}), ParseSchedule("perm:3,1,2", 3));
  ASSERT_TRUE(trace.converged);
  EXPECT_EQ(trace.status, RunStatus::kConverged);
  EXPECT_EQ(trace.changes, 1);
  EXPECT_EQ(trace.final_allocation, Singletons(p, {"r2", "r3", "r3"}));
  EXPECT_EQ(trace.final_counters, (ResourceCounters{1, 1, 2}));
  EXPECT_EQ(trace.k_m, 2);
  EXPECT_EQ(Welfare(p, trace.final_allocation), Q(59, 2));
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps[0].agent, 2);
  EXPECT_EQ(trace.steps[0].before, (Action{0}));
  EXPECT_EQ(trace.steps[0].after, (Action{2}));
  EXPECT_EQ(trace.steps[0].counters, (ResourceCounters{1, 1, 2}));
  const LearningRules family(3, 3);
  EXPECT_TRUE(IsNash(p, Exact::Learning(family, trace.final_counters),
                     trace.final_allocation));
}

TEST(RunBestResponseTest, SecondCounterexampleAlwaysSpreads) {
  const CoveringProblem p = CounterexampleTwo();
  for (const Allocation& initial : EnumerateJointAllocations(p)) {
    for (int offset = 0; offset < 3; ++offset) {
      const DynamicsTrace trace =
          RunBestResponse<Rational>(p, OptimalRule(3), initial, RoundRobin{offset});
      ASSERT_TRUE(trace.converged);
      EXPECT_EQ(Welfare(p, trace.final_allocation), Q(77, 2));
    }
  }
}

TEST(RunLearningTest, FirstCounterexampleAlwaysOptimal) {
  const CoveringProblem p = CounterexampleOne();
  for (const Allocation& initial : EnumerateJointAllocations(p)) {
    for (int offset = 0; offset < 3; ++offset) {
      const DynamicsTrace trace =
          RunLearning<Rational>(p, initial, RoundRobin{offset});
      ASSERT_TRUE(trace.converged);
      EXPECT_EQ(Welfare(p, trace.final_allocation), Q(24));
    }
  }
}

TEST(RunBestResponseTest, NashStartIsOneQuietPass) {
  const CoveringProblem p = CounterexampleOne();
  const DynamicsTrace trace = RunBestResponse<Rational>(
      p, OptimalRule(3), Singletons(p, {"r2", "r3", "r1"}), RoundRobin{});
  EXPECT_TRUE(trace.converged);
  EXPECT_EQ(trace.changes, 0);
  EXPECT_EQ(trace.rounds, 1);
  EXPECT_EQ(trace.turns, 3);
  EXPECT_EQ(trace.final_counters, (ResourceCounters{1, 1, 1, 0}));
}

TEST(RunDynamicsTest, SingleAgent) {
  const CoveringProblem p = SingletonGame(Qs({2, 9, 4}), {{0, 1, 2}});
  const DynamicsTrace br =
      RunBestResponse<Rational>(p, OptimalRule(1), {{0}}, RoundRobin{});
  EXPECT_TRUE(br.converged);
  EXPECT_EQ(br.final_allocation, (Allocation{{1}}));
  const DynamicsTrace learn = RunLearning<Rational>(p, {{0}}, RoundRobin{});
  EXPECT_TRUE(learn.converged);
  EXPECT_EQ(learn.final_allocation, (Allocation{{1}}));
  EXPECT_EQ(learn.rounds, 2);
  for (int x : learn.final_counters) EXPECT_LE(x, 1);
}

TEST(RunDynamicsTest, RoundCapIsReported) {
  const CoveringProblem p = CounterexampleTwo();
  DynamicsOptions options;
  options.max_rounds = 1;
  const DynamicsTrace trace = RunLearning<Rational>(
      p, Singletons(p, {"r2", "r3", "r1"}), ParseSchedule("perm:3,1,2", 3), options);
  EXPECT_FALSE(trace.converged);
  EXPECT_EQ(trace.status, RunStatus::kConvergenceCapExceeded);
  EXPECT_EQ(trace.rounds, 1);
  options.max_rounds = 0;
  EXPECT_THROW(RunLearning<Rational>(p, Singletons(p, {"r2", "r3", "r1"}),
                                     RoundRobin{}, options),
               ArgumentError);
}

TEST(RunDynamicsTest, RejectsInfeasibleStart) {
  const CoveringProblem p = CounterexampleTwo();
  EXPECT_THROW(RunLearning<Rational>(p, Singletons(p, {"r3", "r3", "r1"}),
                                     RoundRobin{}),
               ArgumentError);
}

TEST(RunDynamicsTest, RandomScheduleConverges) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CoveringProblem p = RandomSmallInstance(seed);
    const DynamicsTrace trace =
        RunLearning<Rational>(p, RandomInitial(p, seed), RandomUniform{seed});
    ASSERT_TRUE(trace.converged) << seed;
    const LearningRules family(p.num_agents(), Cardinality(p));
    EXPECT_TRUE(IsNash(p, Exact::Learning(family, trace.final_counters),
                       trace.final_allocation));
  }
}

TEST(RunDynamicsTest, FastModeMatchesExactOnCounterexamples) {
  for (const CoveringProblem& p : {CounterexampleOne(), CounterexampleTwo()}) {
    for (const Allocation& initial : EnumerateJointAllocations(p)) {
      const auto exact = RunLearning<Rational>(p, initial, RoundRobin{});
      const auto fast = RunLearning<double>(p, initial, RoundRobin{});
      EXPECT_EQ(exact.final_allocation, fast.final_allocation);
      EXPECT_EQ(exact.rounds, fast.rounds);
    }
  }
}

TEST(InitialAllocationTest, Defaults) {
  const CoveringProblem cx = CounterexampleOne();
  EXPECT_EQ(DefaultInitial(cx), Singletons(cx, {"r1", "r2", "r1"}));
  const CoveringProblem cap(
      {"p1"}, {{"r1", Q(1)}, {"r2", Q(5)}, {"r3", Q(5)}, {"r4", Q(0)}},
      {CapacityActions{{0, 1, 2, 3}, 2}});
  EXPECT_EQ(DefaultInitial(cap), (Allocation{{1, 2}}));
  const CoveringProblem wide({"p1"}, {{"r1", Q(0)}, {"r2", Q(3)}},
                             {CapacityActions{{0, 1}, 5}});
  EXPECT_EQ(DefaultInitial(wide), (Allocation{{1}}));
}

TEST(InitialAllocationTest, RandomIsSeededAndFeasible) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CoveringProblem p = RandomSmallInstance(seed);
    const Allocation a = RandomInitial(p, seed);
    EXPECT_TRUE(IsFeasible(p, a));
    EXPECT_EQ(a, RandomInitial(p, seed));
  }
}

TEST(EquilibriumBoundTest, SecondCounterexample) {
  const CoveringProblem p = CounterexampleTwo();
  const DynamicsTrace trace = RunLearning<Rational>(
      p, Singletons(p, {"r2", "r3", "r1"}), ParseSchedule("perm:3,1,2", 3));
  const EquilibriumBound bound = CheckEquilibriumBound(p, trace, Q(77, 2));
  EXPECT_EQ(bound.ratio, Q(59, 77));
  EXPECT_EQ(bound.k_m, 2);
  EXPECT_EQ(bound.k, 3);
  EXPECT_EQ(bound.poa_km, Q(2, 3));
  EXPECT_EQ(bound.poa_k, Q(7, 11));
  EXPECT_TRUE(bound.holds);
  EXPECT_FALSE(CheckEquilibriumBound(p, trace, Q(100)).holds);
}

TEST(EquilibriumBoundTest, DegenerateCases) {
  const CoveringProblem p = SingletonGame(Qs({2, 9}), {{0, 1}});
  const DynamicsTrace trace = RunLearning<Rational>(p, {{0}}, RoundRobin{});
  const EquilibriumBound bound = CheckEquilibriumBound(p, trace, Q(9));
  EXPECT_EQ(bound.ratio, Q(1));
  EXPECT_TRUE(bound.holds);
  EXPECT_EQ(CheckEquilibriumBound(p, trace, Q(0)).ratio, Q(1));
  DynamicsTrace unfinished = trace;
  unfinished.converged = false;
  EXPECT_THROW(CheckEquilibriumBound(p, unfinished, Q(9)), ArgumentError);
}

// Learning run invariants over random small instances and every offset.
TEST(DynamicsPropertyTest, LearningInvariants) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const CoveringProblem p = RandomSmallInstance(seed);
    const int k = Cardinality(p);
    const LearningRules family(p.num_agents(), k);
    const Allocation initial = RandomInitial(p, seed);
    for (int offset = 0; offset < p.num_agents(); ++offset) {
      const DynamicsTrace trace =
          RunLearning<Rational>(p, initial, RoundRobin{offset});
      ASSERT_TRUE(trace.converged) << seed;
      Allocation a = initial;
      ResourceCounters counters = CoverageCounts(p, initial);
      for (const DynamicsStep& step : trace.steps) {
        ASSERT_EQ(a[step.agent], step.before);
        for (std::size_t r = 0; r < counters.size(); ++r) {
          EXPECT_GE(step.counters[r], counters[r]);
          EXPECT_LE(step.counters[r], k);
        }
        if (step.after != step.before) {
          const Exact frozen = Exact::Learning(family, counters);
          Allocation next = a;
          next[step.agent] = step.after;
          EXPECT_GT(Potential(p, frozen, next), Potential(p, frozen, a)) << seed;
          a = std::move(next);
        }
        counters = step.counters;
      }
      EXPECT_EQ(a, trace.final_allocation);
      EXPECT_EQ(counters, trace.final_counters);
      EXPECT_LE(trace.k_m, k);
      EXPECT_TRUE(IsNash(p, Exact::Learning(family, trace.final_counters),
                         trace.final_allocation));
    }
  }
}

TEST(DynamicsPropertyTest, BestResponseEndsInNash) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const CoveringProblem p = RandomSmallInstance(seed);
    const DistributionRule f = OptimalRule(Cardinality(p));
    const DynamicsTrace trace =
        RunBestResponse<Rational>(p, f, RandomInitial(p, seed), RoundRobin{});
    ASSERT_TRUE(trace.converged);
    EXPECT_TRUE(IsNash(p, Exact::Fixed(f), trace.final_allocation));
    EXPECT_EQ(trace.final_counters, CoverageCounts(p, trace.final_allocation));
  }
}

}  // namespace
}  // namespace covering
