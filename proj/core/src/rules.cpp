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

#include "covering/rules.hpp"

#include <sstream>
#include <string>

#include "covering/errors.hpp"

namespace covering {
namespace {

std::string Label(std::string_view kind, std::initializer_list<int> args) {
  std::string out(kind);
  for (int a : args) out += ":" + std::to_string(a);
  return out;
}

void RequireRiskyArgs(int p, int kbar) {
  if (p <= 1 || p >= kbar) {
    throw ArgumentError("risky rule needs 1 < p < kbar, got p=" +
                        std::to_string(p) + " kbar=" + std::to_string(kbar));
  }
}

// f*_k on [1, k].
std::vector<Rational> OptimalValues(int k) {
  if (k == 1) return {Rational(1)};
  // tail[j] = 1/((k-1)(k-1)!) + sum_{i=j}^{k-1} 1/i!
  const Rational base = Rational(1) / (Rational(k - 1) * Factorial(k - 1));
  std::vector<Rational> tail(k + 1);
  tail[k] = base;
  Rational inv_fact = Rational(1) / Factorial(k - 1);
  for (int i = k - 1; i >= 1; --i) {
    tail[i] = tail[i + 1] + inv_fact;
    inv_fact *= Rational(i);  // 1/(i-1)! = i / i!
  }
  std::vector<Rational> values;
  values.reserve(k);
  Rational fact = 1;  // (j-1)!
  for (int j = 1; j <= k; ++j) {
    values.push_back(fact * tail[j] / tail[1]);
    fact *= Rational(j);
  }
  return values;
}

}  // namespace

DistributionRule::DistributionRule(std::vector<Rational> values,
                                   std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) throw ArgumentError("distribution rule is empty");
  if (values_.front() != Rational(1)) {
    throw ArgumentError("distribution rule must have f(1) = 1");
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j].sign() < 0) {
      throw ArgumentError("distribution rule has a negative entry at j=" +
                          std::to_string(j + 1));
    }
    if (j > 0 && values_[j] > values_[j - 1]) {
      throw ArgumentError("distribution rule increases at j=" +
                          std::to_string(j + 1));
    }
  }
}

const Rational& DistributionRule::at(int j) const {
  if (j < 1 || j > length()) {
    throw DomainLengthError("rule '" + label_ + "' has length " +
                            std::to_string(length()) + ", queried at " +
                            std::to_string(j));
  }
  return values_[j - 1];
}

DistributionRule DistributionRule::ExtendedTo(int new_length) const {
  std::vector<Rational> values = values_;
  while (static_cast<int>(values.size()) < new_length) {
    values.push_back(values.back());
  }
  return DistributionRule(std::move(values), label_);
}

std::vector<double> DistributionRule::ToDoubles() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.ToDouble());
  return out;
}

Rational Chi(const DistributionRule& rule, int k) {
  if (k < 1) throw ArgumentError("chi needs k >= 1");
  if (k > rule.length()) {
    throw DomainLengthError("chi(f, " + std::to_string(k) + ") needs a rule of length >= k, '" +
                            rule.label() + "' has " + std::to_string(rule.length()));
  }
  Rational best = Rational(k - 1) * rule[k];
  for (int j = 1; j < k; ++j) {
    Rational candidate = Rational(j) * rule[j] - rule[j + 1];
    if (candidate > best) best = std::move(candidate);
  }
  return best;
}

Rational PoaOfRule(const DistributionRule& rule, int k) {
  return Rational(1) / (Rational(1) + Chi(rule, k));
}

DistributionRule OptimalRule(int k, int extend_to) {
  if (k < 1) throw ArgumentError("optimal rule needs k >= 1");
  if (extend_to < k) throw ArgumentError("optimal rule: extend_to must be >= k");
  return DistributionRule(OptimalValues(k), Label("optimal", {k}))
      .ExtendedTo(extend_to);
}

Rational OptimalPoa(int k) {
  if (k < 1) throw ArgumentError("optimal poa needs k >= 1");
  return PoaOfRule(OptimalRule(k), k);
}

Rational ChiRisky(int p, int kbar) {
  RequireRiskyArgs(p, kbar);
  const Rational fact_kbar_1 = Factorial(kbar - 1);
  Rational sum = 0;
  for (int h = 1; h <= kbar - 1 - p; ++h) {
    sum += fact_kbar_1 / Factorial(kbar - h - 1);
  }
  const Rational head = Rational(kbar - 1) * fact_kbar_1 /
                        (Rational(kbar) + Rational(kbar - 1) * sum);
  return head * OptimalValues(p).back() / Factorial(p - 1);
}

DistributionRule RiskyRule(int p, int kbar) {
  RequireRiskyArgs(p, kbar);
  std::vector<Rational> values = OptimalValues(p);
  const Rational last = values.back();
  const Rational chi = ChiRisky(p, kbar);
  for (int j = p + 1; j <= kbar; ++j) {
    const Rational fact_j_1 = Factorial(j - 1);
    Rational sum = 1;
    for (int h = 1; h <= j - 1 - p; ++h) sum += fact_j_1 / Factorial(j - h - 1);
    values.push_back(fact_j_1 / Factorial(p - 1) * last - chi * sum);
  }
  return DistributionRule(std::move(values), Label("risky", {p, kbar}));
}

DistributionRule SolveTailRecursion(int p, int kbar) {
  RequireRiskyArgs(p, kbar);
  // Every tail entry is a multiple of chi: f(j) = coeff[j] * chi, starting
  // from (kbar-1) f(kbar) = chi and f(j) = (f(j+1) + chi) / j.
  std::vector<Rational> coeff(kbar + 1);
  coeff[kbar] = Rational(1) / Rational(kbar - 1);
  for (int j = kbar - 1; j >= p; --j) {
    coeff[j] = (coeff[j + 1] + Rational(1)) / Rational(j);
  }
  std::vector<Rational> values = OptimalValues(p);
  const Rational chi = values.back() / coeff[p];
  for (int j = p + 1; j <= kbar; ++j) values.push_back(coeff[j] * chi);
  return DistributionRule(std::move(values), Label("risky", {p, kbar}));
}

DistributionRule AlgRule(int level, int n) {
  if (level < 1 || level > n) {
    throw ArgumentError("alg rule needs 1 <= l <= n, got l=" +
                        std::to_string(level) + " n=" + std::to_string(n));
  }
  return DistributionRule(OptimalValues(level), Label("alg", {level, n}))
      .ExtendedTo(n);
}

LearningRules::LearningRules(int num_agents, int max_level)
    : num_agents_(num_agents) {
  if (max_level < 1 || max_level > num_agents) {
    throw ArgumentError("learning rules need 1 <= max_level <= n");
  }
  rules_.reserve(max_level);
  for (int l = 1; l <= max_level; ++l) rules_.push_back(AlgRule(l, num_agents));
}

const DistributionRule& LearningRules::ForCounter(int counter) const {
  if (counter < 0 || counter > max_level()) {
    throw ArgumentError("counter " + std::to_string(counter) +
                        " outside learning rule family [0, " +
                        std::to_string(max_level()) + "]");
  }
  return rules_[counter == 0 ? 0 : counter - 1];
}

std::string SerializeRule(const DistributionRule& rule) {
  std::string out = "label: " + rule.label() + "\nvalues:";
  for (const auto& v : rule.values()) out += " " + v.ToFraction();
  out += "\n";
  return out;
}

DistributionRule ParseRule(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string label = "custom";
  std::vector<Rational> values;
  bool have_values = false;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ArgumentError("rule text: expected 'key: value', got '" + line + "'");
    }
    const std::string key = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    if (key == "label") {
      const auto start = rest.find_first_not_of(' ');
      label = start == std::string::npos ? "" : rest.substr(start);
    } else if (key == "values") {
      std::istringstream tokens(rest);
      std::string token;
      while (tokens >> token) values.push_back(Rational::FromFraction(token));
      have_values = true;
    } else {
      throw ArgumentError("rule text: unknown key '" + key + "'");
    }
  }
  if (!have_values) throw ArgumentError("rule text: missing 'values:' line");
  return DistributionRule(std::move(values), label);
}

}  // namespace covering
