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

#ifndef COVERING_RULES_HPP_
#define COVERING_RULES_HPP_

// Distribution rules and their worst-case efficiency.
//
// A distribution rule f assigns to every occupancy count j = 1..L the share
// f(j) of a resource's value that each of the j agents covering it receives.
// The efficiency of all equilibria over games of cardinality k is governed by
// the single scalar
//
//   chi(f, k) = max{ j f(j) - f(j+1) for j < k,  (k-1) f(k) }
//
// through poa(f, k) = 1 / (1 + chi(f, k)). Everything here is exact.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covering/rational.hpp"

namespace covering {

inline constexpr int kDefaultMaxRuleCardinality = 64;

class DistributionRule {
 public:
  // Throws ArgumentError unless values is non-empty, values[0] == 1,
  // non-increasing and non-negative.
  explicit DistributionRule(std::vector<Rational> values,
                            std::string label = "custom");

  int length() const { return static_cast<int>(values_.size()); }
  // 1-based; throws DomainLengthError outside [1, length()].
  const Rational& at(int j) const;
  // 1-based, unchecked.
  const Rational& operator[](int j) const { return values_[j - 1]; }
  std::span<const Rational> values() const { return values_; }
  const std::string& label() const { return label_; }

  // Same rule on [1, max(length(), new_length)], repeating the last entry.
  DistributionRule ExtendedTo(int new_length) const;
  std::vector<double> ToDoubles() const;

  friend bool operator==(const DistributionRule& a, const DistributionRule& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  std::string label_;
};

// max{ j f(j) - f(j+1) : 1 <= j <= k-1 } together with (k-1) f(k).
Rational Chi(const DistributionRule& rule, int k);
Rational PoaOfRule(const DistributionRule& rule, int k);

// The efficiency-maximising rule for cardinality k, constant beyond k up to
// extend_to.
DistributionRule OptimalRule(int k, int extend_to);
inline DistributionRule OptimalRule(int k) { return OptimalRule(k, k); }
Rational OptimalPoa(int k);

// Rule that copies OptimalRule(p) on [1, p] and fills (p, kbar] so that
// chi(., kbar) is minimal. Requires 1 < p < kbar.
DistributionRule RiskyRule(int p, int kbar);
// Closed form of chi(RiskyRule(p, kbar), kbar).
Rational ChiRisky(int p, int kbar);
// RiskyRule obtained instead by backward substitution through the equality
// system j f(j) - f(j+1) = chi on [p, kbar-1], (kbar-1) f(kbar) = chi.
DistributionRule SolveTailRecursion(int p, int kbar);

// OptimalRule(l) on [1, l], then constant at f*_l(l) up to n.
DistributionRule AlgRule(int level, int n);

// alg rules for counter values 1..max_level on a domain of num_agents.
class LearningRules {
 public:
  LearningRules(int num_agents, int max_level);

  int num_agents() const { return num_agents_; }
  int max_level() const { return static_cast<int>(rules_.size()); }
  // Counter value 0 selects the level-1 rule; only its first entry can be
  // read for an unoccupied resource.
  const DistributionRule& ForCounter(int counter) const;

 private:
  int num_agents_;
  std::vector<DistributionRule> rules_;
};

// Text form:
//   label: optimal:3
//   values: 1/1 3/7 2/7
std::string SerializeRule(const DistributionRule& rule);
DistributionRule ParseRule(std::string_view text);

}  // namespace covering

#endif  // COVERING_RULES_HPP_
