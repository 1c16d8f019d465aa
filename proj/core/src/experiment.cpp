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

#include "covering/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "covering/dynamics.hpp"
#include "covering/random.hpp"

namespace covering {
namespace {

struct Point {
  double x;
  double y;
};

Point DrawPoint(Xoshiro256& rng, double side) {
  const double x = rng.NextDouble() * side;
  const double y = rng.NextDouble() * side;
  return {x, y};
}

bool Within(const Point& a, const Point& b, double radius) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= radius * radius;
}

int StationsReaching(const Point& item, std::span<const Point> stations,
                     double radius) {
  int count = 0;
  for (const Point& s : stations) count += Within(item, s, radius);
  return count;
}

void ValidateConfig(const BenchConfig& config) {
  if (config.n_stations < 1 || config.n_items < 1) {
    throw ArgumentError("bench needs at least one station and one item");
  }
  if (!(config.grid_side > 0) || !(config.radius >= 0)) {
    throw ArgumentError("bench needs a positive grid and non-negative radius");
  }
  if (config.capacity < 1) throw ArgumentError("bench capacity must be >= 1");
  if (config.n_instances < 1) throw ArgumentError("bench needs >= 1 instance");
  if (config.resample_cap < 1) throw ArgumentError("resample cap must be >= 1");
  if (config.require_k && *config.require_k < 1) {
    throw ArgumentError("require_k must be >= 1");
  }
  if (config.rules.empty()) throw ArgumentError("bench needs at least one rule");
}

}  // namespace

std::uint64_t InstanceSeed(std::uint64_t base_seed, int instance_index) {
  return DeriveSeed(base_seed, static_cast<std::uint64_t>(instance_index));
}

double TotalZipfValue(int n_items, double alpha) {
  double total = 0.0;
  for (int r = 1; r <= n_items; ++r) total += std::pow(r, -alpha);
  return total;
}

CoveringProblem GenerateCachingInstance(const BenchConfig& config,
                                        int instance_index) {
  ValidateConfig(config);
  Xoshiro256 rng(InstanceSeed(config.base_seed, instance_index));
  const int attempts = config.require_k ? config.resample_cap : 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Point> stations;
    stations.reserve(config.n_stations);
    for (int i = 0; i < config.n_stations; ++i) {
      stations.push_back(DrawPoint(rng, config.grid_side));
    }
    std::vector<Point> items;
    items.reserve(config.n_items);
    for (int r = 0; r < config.n_items; ++r) {
      Point item = DrawPoint(rng, config.grid_side);
      if (config.require_k) {
        int tries = 1;
        while (StationsReaching(item, stations, config.radius) > *config.require_k) {
          if (tries++ >= config.resample_cap) {
            throw ResampleCapExceeded(
                "could not place item " + std::to_string(r + 1) +
                " within reach of at most " + std::to_string(*config.require_k) +
                " stations");
          }
          item = DrawPoint(rng, config.grid_side);
        }
      }
      items.push_back(item);
    }

    std::vector<Resource> resources;
    resources.reserve(config.n_items);
    for (int r = 0; r < config.n_items; ++r) {
      resources.push_back({"o" + std::to_string(r + 1),
                           Rational::FromDouble(std::pow(r + 1, -config.zipf_alpha))});
    }
    std::vector<ActionSet> sets;
    sets.reserve(config.n_stations);
    std::vector<std::string> agent_ids;
    agent_ids.reserve(config.n_stations);
    for (int i = 0; i < config.n_stations; ++i) {
      CapacityActions set;
      set.capacity = config.capacity;
      for (int r = 0; r < config.n_items; ++r) {
        if (Within(items[r], stations[i], config.radius)) set.accessible.push_back(r);
      }
      sets.emplace_back(std::move(set));
      agent_ids.push_back("s" + std::to_string(i + 1));
    }
    CoveringProblem problem(std::move(agent_ids), std::move(resources),
                            std::move(sets));
    if (!config.require_k || Cardinality(problem) == *config.require_k) {
      return problem;
    }
  }
  throw ResampleCapExceeded("no instance with cardinality " +
                            std::to_string(*config.require_k) + " in " +
                            std::to_string(config.resample_cap) + " draws");
}

std::vector<ExperimentRow> RunInstance(const BenchConfig& config,
                                       int instance_index) {
  const CoveringProblem problem = GenerateCachingInstance(config, instance_index);
  const int k = Cardinality(problem);
  const double w_tot = TotalZipfValue(config.n_items, config.zipf_alpha);
  const Allocation initial = DefaultInitial(problem);
  DynamicsOptions options;
  options.max_rounds = config.max_rounds;
  options.record_steps = false;
  const Schedule schedule = RoundRobin{0};

  std::vector<ExperimentRow> rows;
  rows.reserve(config.rules.size());
  for (const std::string& rule_text : config.rules) {
    const RuleSpec spec = ParseRuleSpec(rule_text, config.kbar);
    const DynamicsTrace trace =
        spec.is_learning()
            ? RunLearning<double>(problem, initial, schedule, options)
            : RunBestResponse<double>(problem, MaterializeRule(spec, problem),
                                      initial, schedule, options);
    ExperimentRow row;
    row.instance = instance_index;
    row.rule = rule_text;
    row.welfare = FastWelfare(problem, trace.final_allocation);
    row.w_tot = w_tot;
    row.ratio = row.welfare / w_tot;
    row.rounds = trace.rounds;
    row.k = k;
    if (spec.is_learning()) row.k_m = trace.k_m;
    row.converged = trace.converged;
    rows.push_back(std::move(row));
  }
  return rows;
}

ExperimentResult RunExperiment(const BenchConfig& config) {
  ValidateConfig(config);
  for (const auto& rule : config.rules) ParseRuleSpec(rule, config.kbar);

  std::vector<std::vector<ExperimentRow>> per_instance(config.n_instances);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const int index = next.fetch_add(1);
      if (index >= config.n_instances) return;
      try {
        per_instance[index] = RunInstance(config, index);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(config.n_instances);
        return;
      }
    }
  };
  const int threads = std::clamp(config.threads, 1, config.n_instances);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  for (auto& rows : per_instance) {
    for (auto& row : rows) result.rows.push_back(std::move(row));
  }
  result.summary = Summarize(result.rows);
  return result;
}

std::vector<RuleSummary> Summarize(std::span<const ExperimentRow> rows) {
  if (rows.empty()) throw ArgumentError("cannot summarize an empty experiment");
  std::vector<RuleSummary> out;
  std::map<std::string, std::size_t> slot;
  std::vector<double> ratio_sum;
  std::vector<double> rounds_sum;
  for (const ExperimentRow& row : rows) {
    auto [it, inserted] = slot.emplace(row.rule, out.size());
    if (inserted) {
      RuleSummary s;
      s.rule = row.rule;
      s.min_ratio = s.max_ratio = row.ratio;
      s.min_rounds = s.max_rounds = row.rounds;
      out.push_back(s);
      ratio_sum.push_back(0.0);
      rounds_sum.push_back(0.0);
    }
    RuleSummary& s = out[it->second];
    ++s.count;
    s.min_ratio = std::min(s.min_ratio, row.ratio);
    s.max_ratio = std::max(s.max_ratio, row.ratio);
    s.min_rounds = std::min(s.min_rounds, row.rounds);
    s.max_rounds = std::max(s.max_rounds, row.rounds);
    ratio_sum[it->second] += row.ratio;
    rounds_sum[it->second] += static_cast<double>(row.rounds);
    if (!row.converged) ++s.not_converged;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].mean_ratio = ratio_sum[i] / static_cast<double>(out[i].count);
    out[i].mean_rounds = rounds_sum[i] / static_cast<double>(out[i].count);
  }
  return out;
}

void WriteRowsCsv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << "instance,rule,welfare,w_tot,ratio,rounds,k,k_m\n";
  for (const ExperimentRow& row : rows) {
    out << fmt::format("{},{},{:.12g},{:.12g},{:.12g},{},{},{}\n", row.instance,
                       row.rule, row.welfare, row.w_tot, row.ratio, row.rounds,
                       row.k, row.k_m ? std::to_string(*row.k_m) : "");
  }
}

void WriteHistogramCsv(std::ostream& out, std::span<const ExperimentRow> rows,
                       double bin_width) {
  if (!(bin_width > 0) || bin_width > 1) {
    throw ArgumentError("histogram bin width must be in (0, 1]");
  }
  if (rows.empty()) throw ArgumentError("cannot histogram an empty experiment");
  const long bins = static_cast<long>(std::ceil(1.0 / bin_width - 1e-9));
  std::vector<std::string> order;
  std::map<std::string, std::map<long, long>> counts;
  for (const ExperimentRow& row : rows) {
    if (!counts.count(row.rule)) order.push_back(row.rule);
    const long bin = std::clamp(static_cast<long>(std::floor(row.ratio / bin_width)),
                                0L, bins - 1);
    ++counts[row.rule][bin];
  }
  out << "rule,bin_lo,bin_hi,count\n";
  for (const std::string& rule : order) {
    for (const auto& [bin, count] : counts[rule]) {
      out << fmt::format("{},{:.6g},{:.6g},{}\n", rule, bin * bin_width,
                         (bin + 1) * bin_width, count);
    }
  }
}

void WriteSummaryTable(std::ostream& out, std::span<const RuleSummary> summary) {
  out << fmt::format("{:<14} {:>9} {:>10} {:>10} {:>10} {:>7} {:>7} {:>7} {:>11}\n",
                     "rule", "instances", "min ratio", "mean ratio", "max ratio",
                     "min BR", "max BR", "avg BR", "unconverged");
  for (const RuleSummary& s : summary) {
    out << fmt::format(
        "{:<14} {:>9} {:>10.4f} {:>10.4f} {:>10.4f} {:>7} {:>7} {:>7.2f} {:>11}\n",
        s.rule, s.count, s.min_ratio, s.mean_ratio, s.max_ratio, s.min_rounds,
        s.max_rounds, s.mean_rounds, s.not_converged);
  }
}

}  // namespace covering
