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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "covering/errors.hpp"
#include "test_util.hpp"

namespace covering {
namespace {

using testing::Q;
using testing::Qs;
using testing::Singletons;
using testing::SingletonGame;

using Exact = RuleAccessor<Rational>;

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(CountJointAllocations(CounterexampleOne()), 36u);
  EXPECT_EQ(EnumerateJointAllocations(CounterexampleOne()).size(), 36u);
  EXPECT_EQ(CountJointAllocations(SingletonGame(Qs({1, 2, 3, 4}), {{0, 1, 2, 3}})), 4u);
  EXPECT_EQ(CountJointAllocations(SingletonGame(Qs({1, 2}), {{0, 1}, {0, 1}})), 4u);
}

TEST(EnumerateTest, LexicographicAndDistinct) {
  const auto all = EnumerateJointAllocations(CounterexampleOne());
  EXPECT_EQ(all.front(), (Allocation{{0}, {1}, {0}}));
  EXPECT_EQ(all[1], (Allocation{{0}, {1}, {1}}));
  EXPECT_EQ(all.back(), (Allocation{{2}, {3}, {3}}));
  EXPECT_EQ(std::set<Allocation>(all.begin(), all.end()).size(), all.size());
}

TEST(EnumerateTest, CapacitySubsets) {
  const CoveringProblem p({"p1"}, {{"a", Q(1)}, {"b", Q(1)}, {"c", Q(1)}},
                          {CapacityActions{{0, 1, 2}, 2}});
  const auto actions = FeasibleActions(p);
  ASSERT_EQ(actions.size(), 1u);
  EXPECT_EQ(actions[0], (std::vector<Action>{{}, {0}, {0, 1}, {0, 2}, {1}, {1, 2}, {2}}));
}

TEST(EnumerateTest, RefusesOversizedProblems) {
  OracleOptions tight;
  tight.max_joint_allocations = 35;
  EXPECT_THROW(CountJointAllocations(CounterexampleOne(), tight), SizeCapExceeded);
  EXPECT_THROW(OptimalAllocation(CounterexampleOne(), tight), SizeCapExceeded);
  Action wide;
  std::vector<Resource> resources;
  for (int r = 0; r < 13; ++r) {
    resources.push_back({"r" + std::to_string(r), Q(1)});
    wide.push_back(r);
  }
  const CoveringProblem p({"p1"}, resources, {CapacityActions{wide, 2}});
  EXPECT_THROW(FeasibleActions(p), SizeCapExceeded);
}

TEST(OptimalAllocationTest, Examples) {
  EXPECT_EQ(OptimalAllocation(CounterexampleOne()).welfare, Q(24));
  const OptimalResult two = OptimalAllocation(CounterexampleTwo());
  EXPECT_EQ(two.welfare, Q(77, 2));
  EXPECT_EQ(Welfare(CounterexampleTwo(), two.allocation), Q(77, 2));
  EXPECT_EQ(OptimalAllocation(SingletonGame(Qs({0, 0}), {{0, 1}, {1}})).welfare, Q(0));
}

TEST(AllNashTest, FirstCounterexample) {
  const CoveringProblem p = CounterexampleOne();
  const OracleReport report = AllNash(p, Exact::Fixed(OptimalRule(3)));
  EXPECT_EQ(report.optimal_welfare, Q(24));
  const Allocation bad = Singletons(p, {"r2", "r3", "r1"});
  const auto it = std::find_if(report.nash.begin(), report.nash.end(),
                               [&](const NashEntry& e) { return e.allocation == bad; });
  ASSERT_NE(it, report.nash.end());
  EXPECT_EQ(it->welfare, Q(23));
  EXPECT_EQ(report.worst_nash_welfare, Q(23));
  EXPECT_EQ(report.worst_ratio, Q(23, 24));
  for (const auto& a : report.optimal_allocations) EXPECT_EQ(Welfare(p, a), Q(24));
}

TEST(AllNashTest, SecondCounterexampleSpreads) {
  const CoveringProblem p = CounterexampleTwo();
  const OracleReport report = AllNash(p, Exact::Fixed(OptimalRule(3)));
  ASSERT_FALSE(report.nash.empty());
  for (const NashEntry& e : report.nash) {
    EXPECT_EQ(e.welfare, Q(77, 2));
    EXPECT_EQ(CoverageCounts(p, e.allocation), (ResourceCounters{1, 1, 1}));
  }
}

TEST(AllNashTest, SingleAgentPicksItsBestActions) {
  const CoveringProblem p = SingletonGame(Qs({4, 9, 9}), {{0, 1, 2}});
  const OracleReport report = AllNash(p, Exact::Fixed(OptimalRule(1)));
  ASSERT_EQ(report.nash.size(), 2u);
  EXPECT_EQ(report.nash[0].allocation, (Allocation{{1}}));
  EXPECT_EQ(report.nash[1].allocation, (Allocation{{2}}));
  EXPECT_EQ(report.worst_ratio, Q(1));
}

TEST(LearningSweepTest, FirstCounterexample) {
  const auto outcomes = LearningOverAllInitials(CounterexampleOne());
  EXPECT_EQ(outcomes.size(), 108u);
  for (const auto& o : outcomes) {
    EXPECT_TRUE(o.converged);
    EXPECT_EQ(o.final_welfare, Q(24)) << o.schedule;
  }
}

TEST(LearningSweepTest, ScheduledSecondCounterexample) {
  const CoveringProblem p = CounterexampleTwo();
  const std::vector<Schedule> schedules{ParseSchedule("perm:3,1,2", 3)};
  const auto outcomes = LearningOverAllInitials(p, schedules);
  const Allocation start = Singletons(p, {"r2", "r3", "r1"});
  const auto it = std::find_if(outcomes.begin(), outcomes.end(),
                               [&](const LearningOutcome& o) { return o.initial == start; });
  ASSERT_NE(it, outcomes.end());
  EXPECT_EQ(it->final_welfare, Q(59, 2));
  EXPECT_EQ(it->k_m, 2);
  const std::vector<Schedule> random{RandomUniform{1}};
  EXPECT_THROW(LearningOverAllInitials(p, random), ArgumentError);
}

TEST(LearningSweepTest, CardinalityOneIsAlwaysOptimal) {
  const CoveringProblem p = SingletonGame(Qs({3, 1, 4}), {{0, 1}, {2}});
  const Rational best = OptimalAllocation(p).welfare;
  for (const auto& o : LearningOverAllInitials(p)) EXPECT_EQ(o.final_welfare, best);
}

TEST(RandomSmallInstanceTest, DeterministicAndBounded) {
  const SmallInstanceBounds bounds;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const CoveringProblem p = RandomSmallInstance(seed);
    EXPECT_GE(p.num_agents(), 1);
    EXPECT_LE(p.num_agents(), bounds.max_agents);
    EXPECT_LE(p.num_resources(), bounds.max_resources);
    for (int i = 0; i < p.num_agents(); ++i) {
      const auto& set = std::get<ExplicitActions>(p.action_set(i));
      EXPECT_GE(set.actions.size(), 1u);
      EXPECT_LE(set.actions.size(), static_cast<std::size_t>(bounds.max_actions));
    }
    for (int r = 0; r < p.num_resources(); ++r) {
      EXPECT_GE(p.value(r), Q(0));
      EXPECT_LE(p.value(r), Q(bounds.max_value));
    }
    const int k = Cardinality(p);
    EXPECT_GE(k, 1);
    EXPECT_LE(k, p.num_agents());
  }
  const CoveringProblem a = RandomSmallInstance(42);
  const CoveringProblem b = RandomSmallInstance(42);
  EXPECT_EQ(EnumerateJointAllocations(a), EnumerateJointAllocations(b));
  for (int r = 0; r < a.num_resources(); ++r) EXPECT_EQ(a.value(r), b.value(r));
}

TEST(CounterexampleTest, ValidatesValues) {
  EXPECT_NO_THROW(CounterexampleOne(Qs({11, 5, 7, 6})));
  EXPECT_THROW(CounterexampleOne(Qs({11, 7, 5, 6})), ArgumentError);
  EXPECT_THROW(CounterexampleOne(Qs({11, 5, 7})), ArgumentError);
  EXPECT_NO_THROW(CounterexampleTwo(Qs({9, Q(19, 2), 20})));
  EXPECT_THROW(CounterexampleTwo(Qs({9, 8, 20})), ArgumentError);
  EXPECT_THROW(BuiltinInstance("counterexample-iii"), ArgumentError);
  EXPECT_EQ(TotalValue(BuiltinInstance("counterexample-ii")), Q(77, 2));
}

// Worst equilibria under f*_k never fall below the analytic bound, and every
// best-response run lands on an enumerated equilibrium.
TEST(OraclePropertyTest, WorstEquilibriumRespectsBound) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const CoveringProblem p = RandomSmallInstance(seed);
    const int k = Cardinality(p);
    const DistributionRule f = OptimalRule(k);
    const OracleReport report = AllNash(p, Exact::Fixed(f));
    EXPECT_GE(report.worst_ratio, OptimalPoa(k)) << seed;
    EXPECT_LE(report.worst_ratio, Q(1));
    for (int offset = 0; offset < p.num_agents(); ++offset) {
      const DynamicsTrace trace =
          RunBestResponse<Rational>(p, f, DefaultInitial(p), RoundRobin{offset});
      const bool listed =
          std::any_of(report.nash.begin(), report.nash.end(), [&](const NashEntry& e) {
            return e.allocation == trace.final_allocation;
          });
      EXPECT_TRUE(listed) << seed;
    }
  }
}

}  // namespace
}  // namespace covering
