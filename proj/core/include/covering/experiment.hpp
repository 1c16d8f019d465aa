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

#ifndef COVERING_EXPERIMENT_HPP_
#define COVERING_EXPERIMENT_HPP_

// Distributed data caching experiment. Stations (agents) and items
// (resources) are scattered uniformly on a square grid; a station can store
// up to `capacity` items lying within `radius` of it, and item r (1-based
// popularity rank) is worth r^-alpha. Every configured rule is run to an
// equilibrium from the same start and scored against the total item value.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "covering/game.hpp"

namespace covering {

struct BenchConfig {
  double grid_side = 800.0;
  int n_stations = 150;
  int n_items = 1500;
  double radius = 50.0;
  int capacity = 10;
  double zipf_alpha = 0.6;
  int n_instances = 1;
  std::uint64_t base_seed = 0;
  std::vector<std::string> rules = {"risky:2", "optimal:5", "optimal:3",
                                    "learning"};
  int kbar = 5;  // completes "risky:P"
  std::optional<int> require_k;
  int resample_cap = 1000;
  long max_rounds = 10000;
  int threads = 1;
};

std::uint64_t InstanceSeed(std::uint64_t base_seed, int instance_index);

// Deterministic in (config, instance_index). With require_k set, every item
// position is redrawn until at most require_k stations reach it, and the
// whole instance is redrawn until some item is reached by exactly
// require_k. Throws ResampleCapExceeded when either loop hits resample_cap.
CoveringProblem GenerateCachingInstance(const BenchConfig& config,
                                        int instance_index);

// sum_{r=1}^{n_items} r^-alpha, summed in rank order.
double TotalZipfValue(int n_items, double alpha);

struct ExperimentRow {
  int instance = 0;
  std::string rule;
  double welfare = 0.0;
  double w_tot = 0.0;
  double ratio = 0.0;
  long rounds = 0;
  int k = 0;
  std::optional<int> k_m;  // learning rows only
  bool converged = false;
};

struct RuleSummary {
  std::string rule;
  std::size_t count = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  long min_rounds = 0;
  long max_rounds = 0;
  double mean_rounds = 0.0;
  std::size_t not_converged = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;  // instance-major, rules in config order
  std::vector<RuleSummary> summary;
};

// Rows for one instance, in config rule order.
std::vector<ExperimentRow> RunInstance(const BenchConfig& config,
                                       int instance_index);
ExperimentResult RunExperiment(const BenchConfig& config);

// Per rule, in order of first appearance. Throws ArgumentError when empty.
std::vector<RuleSummary> Summarize(std::span<const ExperimentRow> rows);

// instance,rule,welfare,w_tot,ratio,rounds,k,k_m
void WriteRowsCsv(std::ostream& out, std::span<const ExperimentRow> rows);
// rule,bin_lo,bin_hi,count for every occupied bin of width bin_width on [0,1].
void WriteHistogramCsv(std::ostream& out, std::span<const ExperimentRow> rows,
                       double bin_width = 0.002);
void WriteSummaryTable(std::ostream& out, std::span<const RuleSummary> summary);

}  // namespace covering

#endif  // COVERING_EXPERIMENT_HPP_
