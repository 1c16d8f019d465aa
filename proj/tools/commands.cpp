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

#include "commands.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "covering/dynamics.hpp"
#include "covering/errors.hpp"
#include "covering/instance_io.hpp"
#include "covering/oracle.hpp"
#include "covering/rules.hpp"
#include "json.hpp"

namespace covering::cli {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> SplitList(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.emplace_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

template <typename Int>
Int ParseInt(std::string_view text, std::string_view what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ArgumentError(fmt::format("{}: '{}' is not an integer", what, text));
  }
  return value;
}

std::string Exact(const Rational& value) {
  return fmt::format("{} = {}", value.ToFraction(), value.ToDecimal());
}

std::string JoinCounters(const ResourceCounters& counters) {
  if (counters.empty()) return "-";
  std::string out;
  for (std::size_t r = 0; r < counters.size(); ++r) {
    if (r > 0) out += ",";
    out += std::to_string(counters[r]);
  }
  return out;
}

std::string NamedCounters(const CoveringProblem& problem,
                          const ResourceCounters& counters) {
  std::string out;
  for (std::size_t r = 0; r < counters.size(); ++r) {
    if (r > 0) out += " ";
    out += problem.resource(static_cast<int>(r)).id + "=" +
           std::to_string(counters[r]);
  }
  return out;
}

void CheckRuleCap(int k) {
  if (k > kDefaultMaxRuleCardinality) {
    throw ArgumentError(fmt::format("k = {} exceeds the supported maximum {}", k,
                                    kDefaultMaxRuleCardinality));
  }
}

DistributionRule BuildRule(const RuleSpec& spec, int extend_to) {
  switch (spec.kind) {
    case RuleSpec::Kind::kOptimal:
      if (spec.first == 0) {
        throw ArgumentError("rules needs an explicit cardinality: optimal:K");
      }
      CheckRuleCap(spec.first);
      return OptimalRule(spec.first, std::max(spec.first, extend_to));
    case RuleSpec::Kind::kRisky:
      CheckRuleCap(spec.second);
      return RiskyRule(spec.first, spec.second).ExtendedTo(extend_to);
    case RuleSpec::Kind::kAlg:
      CheckRuleCap(spec.second);
      return AlgRule(spec.first, spec.second).ExtendedTo(extend_to);
    case RuleSpec::Kind::kLearning:
      break;
  }
  throw ArgumentError("learning is a family of rules; pick alg:L:N instead");
}

Allocation InitialAllocation(const CoveringProblem& problem,
                             std::string_view init) {
  if (init == "first") return DefaultInitial(problem);
  if (init.starts_with("random:")) {
    return RandomInitial(problem,
                         ParseInt<std::uint64_t>(init.substr(7), "init seed"));
  }
  if (init.starts_with("file:")) {
    return LoadAllocation(problem, std::string(init.substr(5)));
  }
  throw ArgumentError(fmt::format(
      "unknown init '{}' (expected first, random:SEED or file:PATH)", init));
}

void WriteTrace(std::ostream& out, const CoveringProblem& problem,
                const DynamicsTrace& trace) {
  out << "t agent before after counters\n";
  for (const DynamicsStep& step : trace.steps) {
    out << fmt::format("{} {} {} {} {}\n", step.t, problem.agent_id(step.agent),
                       FormatAction(problem, step.before),
                       FormatAction(problem, step.after),
                       JoinCounters(step.counters));
  }
}

void WriteRunSummary(std::ostream& out, const CoveringProblem& problem,
                     const DynamicsTrace& trace) {
  out << "# summary\n";
  out << "welfare: " << ValueToText(Welfare(problem, trace.final_allocation))
      << "\n";
  out << "final: " << FormatAllocation(problem, trace.final_allocation) << "\n";
  out << "counters: " << NamedCounters(problem, trace.final_counters) << "\n";
  out << "rounds: " << trace.rounds << "\n";
  out << "turns: " << trace.turns << "\n";
  out << "changes: " << trace.changes << "\n";
  out << "k_m: " << trace.k_m << "\n";
  out << "converged: " << (trace.converged ? "true" : "false") << "\n";
  if (!trace.converged) out << "status: convergence cap exceeded\n";
}

Json AllocationJson(const CoveringProblem& problem, const Allocation& allocation) {
  return Json::parse(AllocationToJson(problem, allocation));
}

// Verdict lines for the counterexample report.
class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void Check(bool ok, const std::string& what) {
    out_ << (ok ? "PASS " : "FAIL ") << what << "\n";
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }

  int Finish() {
    if (first_failure_.empty()) {
      out_ << "verdict: PASS\n";
      return kExitOk;
    }
    out_ << "verdict: FAIL (" << first_failure_ << ")\n";
    return kExitAssertion;
  }

 private:
  std::ostream& out_;
  std::string first_failure_;
};

std::vector<Rational> ParseValues(const std::vector<std::string>& texts) {
  std::vector<Rational> values;
  for (const auto& text : texts) values.push_back(ValueFromText(text));
  return values;
}

Allocation Singletons(const CoveringProblem& problem,
                      std::initializer_list<const char*> ids) {
  Allocation allocation;
  for (const char* id : ids) allocation.push_back({problem.ResourceIndexOf(id)});
  return allocation;
}

bool FullySpread(const CoveringProblem& problem, const Allocation& allocation) {
  const ResourceCounters coverage = CoverageCounts(problem, allocation);
  return std::all_of(coverage.begin(), coverage.end(),
                     [](int c) { return c == 1; });
}

int CounterexampleOneReport(std::span<const Rational> values, std::ostream& out) {
  const CoveringProblem problem = CounterexampleOne(values);
  const Rational& v1 = problem.value(0);
  const Rational& v2 = problem.value(1);
  const Rational& v3 = problem.value(2);
  const Rational& v4 = problem.value(3);
  out << "case i: values";
  for (int r = 0; r < 4; ++r) out << " " << ValueToText(problem.value(r));
  out << "\n";

  Checklist checks(out);
  const auto fixed = RuleAccessor<Rational>::Fixed(OptimalRule(3));
  const OracleReport report = AllNash(problem, fixed);
  const Rational optimum = v1 + v3 + v4;
  checks.Check(report.optimal_welfare == optimum,
               "optimum = v1+v3+v4 = " + ValueToText(optimum));
  const Allocation bad = Singletons(problem, {"r2", "r3", "r1"});
  const bool listed = std::any_of(report.nash.begin(), report.nash.end(),
                                  [&](const NashEntry& e) { return e.allocation == bad; });
  checks.Check(listed, "f*_3 equilibrium " + FormatAllocation(problem, bad) +
                           " exists with welfare v1+v2+v3 = " +
                           ValueToText(v1 + v2 + v3));
  checks.Check(report.worst_nash_welfare < report.optimal_welfare,
               "worst f*_3 equilibrium welfare " +
                   ValueToText(report.worst_nash_welfare) + " < optimum");
  out << "worst f*_3 equilibrium ratio: " << Exact(report.worst_ratio) << "\n";

  const auto outcomes = LearningOverAllInitials(problem);
  const bool all_optimal =
      std::all_of(outcomes.begin(), outcomes.end(), [&](const LearningOutcome& o) {
        return o.converged && o.final_welfare == report.optimal_welfare;
      });
  checks.Check(all_optimal,
               fmt::format("learning reaches the optimum in all {} runs "
                           "(every initial allocation, every round-robin offset)",
                           outcomes.size()));
  Rational learning_min = report.optimal_welfare;
  for (const auto& o : outcomes) learning_min = std::min(learning_min, o.final_welfare);
  checks.Check(learning_min > report.worst_nash_welfare,
               "min learning welfare " + ValueToText(learning_min) +
                   " > min f*_3 equilibrium welfare " +
                   ValueToText(report.worst_nash_welfare));
  return checks.Finish();
}

int CounterexampleTwoReport(std::span<const Rational> values, std::ostream& out) {
  const CoveringProblem problem = CounterexampleTwo(values);
  const Rational& v2 = problem.value(1);
  const Rational& v3 = problem.value(2);
  out << "case ii: values";
  for (int r = 0; r < 3; ++r) out << " " << ValueToText(problem.value(r));
  out << "\n";

  Checklist checks(out);
  const auto fixed = RuleAccessor<Rational>::Fixed(OptimalRule(3));
  const OracleReport report = AllNash(problem, fixed);
  const Rational total = TotalValue(problem);
  const bool spread = !report.nash.empty() &&
                      std::all_of(report.nash.begin(), report.nash.end(),
                                  [&](const NashEntry& e) {
                                    return e.welfare == total &&
                                           FullySpread(problem, e.allocation);
                                  });
  checks.Check(spread, fmt::format("all {} f*_3 equilibria are fully spread with "
                                   "welfare {}",
                                   report.nash.size(), ValueToText(total)));

  const Allocation initial = Singletons(problem, {"r2", "r3", "r1"});
  const DynamicsTrace trace = RunLearning<Rational>(
      problem, initial, ParseSchedule("perm:3,1,2", 3));
  const Allocation expected = Singletons(problem, {"r2", "r3", "r3"});
  checks.Check(trace.converged && trace.changes == 1 &&
                   trace.final_allocation == expected,
               "learning from " + FormatAllocation(problem, initial) +
                   " with p3 first converges after one change to " +
                   FormatAllocation(problem, expected));
  const Rational welfare = Welfare(problem, trace.final_allocation);
  checks.Check(welfare == v2 + v3,
               "learning welfare v2+v3 = " + ValueToText(welfare) + " < " +
                   ValueToText(total));
  if (trace.converged) {
    const EquilibriumBound bound =
        CheckEquilibriumBound(problem, trace, report.optimal_welfare);
    checks.Check(bound.holds && bound.k_m == 2,
                 fmt::format("k_m = {}, bound poa(f*_k_m) = {} <= ratio {}",
                             bound.k_m, bound.poa_km.ToFraction(),
                             bound.ratio.ToFraction()));
  }
  return checks.Finish();
}

}  // namespace

CoveringProblem LoadProblem(std::string_view source) {
  if (source.starts_with("builtin:")) return BuiltinInstance(source.substr(8));
  if (source.empty()) throw ArgumentError("missing --instance");
  return LoadInstance(std::string(source));
}

int RunRules(const RulesCommand& command, std::ostream& out) {
  if (command.rule.empty() == command.file.empty()) {
    throw ArgumentError("give exactly one of --rule or --file");
  }
  DistributionRule rule =
      command.file.empty()
          ? BuildRule(ParseRuleSpec(command.rule), command.extend_to)
          : ParseRule(ReadTextFile(command.file)).ExtendedTo(command.extend_to);
  out << SerializeRule(rule);
  out << "decimal:";
  for (const auto& v : rule.values()) out << " " << v.ToDecimal();
  out << "\n";
  const int k = command.k == 0 ? rule.length() : command.k;
  out << "k: " << k << "\n";
  out << "chi: " << Exact(Chi(rule, k)) << "\n";
  out << "poa: " << Exact(PoaOfRule(rule, k)) << "\n";
  return kExitOk;
}

int RunPoaTable(const PoaTableCommand& command, std::ostream& out) {
  if (command.k_max < 1) throw ArgumentError("--k-max must be >= 1");
  CheckRuleCap(command.k_max);
  out << fmt::format("{:>3}  {:<14}  {}\n", "k", "poa", "exact");
  for (int k = 1; k <= command.k_max; ++k) {
    const Rational poa = OptimalPoa(k);
    out << fmt::format("{:>3}  {:<14}  {}\n", k, poa.ToDecimal(), poa.ToFraction());
  }
  if (command.kbar == 0) {
    if (!command.p.empty()) throw ArgumentError("--p needs --kbar");
    return kExitOk;
  }
  CheckRuleCap(command.kbar);
  if (command.k < 1 || command.k > command.kbar) {
    throw ArgumentError("--k must lie in [1, kbar]");
  }
  std::vector<int> ps = command.p;
  if (ps.empty()) {
    for (int p = 2; p < command.kbar; ++p) ps.push_back(p);
  }
  const Rational reference = PoaOfRule(OptimalRule(command.kbar), command.k);
  out << fmt::format("\nrisky f'_p against f*_{} at k = {} (poa {})\n",
                     command.kbar, command.k, reference.ToDecimal());
  out << fmt::format("{:>3}  {:<14}  {:>10}\n", "p", "poa", "diff %");
  for (int p : ps) {
    const Rational poa = PoaOfRule(RiskyRule(p, command.kbar), command.k);
    const Rational diff = Rational(100) * (poa - reference) / reference;
    out << fmt::format("{:>3}  {:<14}  {:>10}\n", p, poa.ToDecimal(),
                       diff.ToFixed(3));
  }
  return kExitOk;
}

int RunDynamics(const DynamicsCommand& command, std::ostream& out) {
  const CoveringProblem problem = LoadProblem(command.instance);
  const RuleSpec spec = ParseRuleSpec(command.rule);
  const Schedule schedule = ParseSchedule(command.schedule, problem.num_agents());
  Allocation initial = InitialAllocation(problem, command.init);
  DynamicsOptions options;
  options.max_rounds = command.max_rounds;

  DynamicsTrace trace;
  if (spec.is_learning()) {
    trace = command.fast
                ? RunLearning<double>(problem, std::move(initial), schedule, options)
                : RunLearning<Rational>(problem, std::move(initial), schedule, options);
  } else {
    const DistributionRule rule = MaterializeRule(spec, problem);
    trace = command.fast ? RunBestResponse<double>(problem, rule, std::move(initial),
                                                   schedule, options)
                         : RunBestResponse<Rational>(problem, rule, std::move(initial),
                                                     schedule, options);
  }

  out << "rule: " << spec.ToString() << "\n";
  out << "schedule: " << ScheduleToString(schedule) << "\n";
  if (command.trace_out.empty()) {
    WriteTrace(out, problem, trace);
  } else {
    std::ofstream file(command.trace_out);
    if (!file) throw ArgumentError("cannot write " + command.trace_out);
    WriteTrace(file, problem, trace);
    WriteRunSummary(file, problem, trace);
  }
  WriteRunSummary(out, problem, trace);
  if (!trace.converged) return kExitCap;

  if (command.check_bound) {
    const OptimalResult optimum = OptimalAllocation(problem);
    const EquilibriumBound bound =
        CheckEquilibriumBound(problem, trace, optimum.welfare);
    out << "# bound\n";
    out << "optimal welfare: " << ValueToText(optimum.welfare) << "\n";
    out << "ratio: " << Exact(bound.ratio) << "\n";
    out << fmt::format("poa(f*_{0}, {0}): {1}\n", bound.k_m, Exact(bound.poa_km));
    out << fmt::format("poa(f*_{0}, {0}): {1}\n", bound.k, Exact(bound.poa_k));
    out << "holds: " << (bound.holds ? "true" : "false") << "\n";
    if (!bound.holds) return kExitAssertion;
  }
  return kExitOk;
}

int RunOracle(const OracleCommand& command, std::ostream& out) {
  const CoveringProblem problem = LoadProblem(command.instance);
  const RuleSpec spec = ParseRuleSpec(command.rule);
  OracleOptions options;
  options.max_joint_allocations = command.max_joint;

  std::optional<LearningRules> family;
  RuleAccessor<Rational> rules;
  if (spec.is_learning()) {
    if (command.counters.empty()) {
      throw ArgumentError("the learning rule needs --counters x1,...,xm");
    }
    ResourceCounters counters;
    for (const auto& part : SplitList(command.counters, ',')) {
      counters.push_back(ParseInt<int>(part, "counter"));
    }
    if (static_cast<int>(counters.size()) != problem.num_resources()) {
      throw ArgumentError(fmt::format("--counters needs {} entries",
                                      problem.num_resources()));
    }
    family.emplace(problem.num_agents(), Cardinality(problem));
    rules = RuleAccessor<Rational>::Learning(*family, counters);
  } else {
    if (!command.counters.empty()) {
      throw ArgumentError("--counters applies to the learning rule only");
    }
    rules = RuleAccessor<Rational>::Fixed(MaterializeRule(spec, problem));
  }
  const OracleReport report = AllNash(problem, rules, options);
  const int k = Cardinality(problem);

  out << "instance: " << command.instance << "\n";
  out << "rule: " << spec.ToString() << "\n";
  out << "cardinality: " << k << "\n";
  out << "joint allocations: " << CountJointAllocations(problem, options) << "\n";
  out << "optimal welfare: " << ValueToText(report.optimal_welfare) << "\n";
  out << "optimal allocations: " << report.optimal_allocations.size() << "\n";
  for (const auto& a : report.optimal_allocations) {
    out << "  " << FormatAllocation(problem, a) << "\n";
  }
  out << "nash equilibria: " << report.nash.size() << "\n";
  for (const auto& e : report.nash) {
    out << fmt::format("  {:<40} {}\n", FormatAllocation(problem, e.allocation),
                       ValueToText(e.welfare));
  }
  out << "worst nash welfare: " << ValueToText(report.worst_nash_welfare) << "\n";
  out << "worst ratio: " << Exact(report.worst_ratio) << "\n";
  out << fmt::format("poa(f*_{0}, {0}): {1}\n", k, Exact(OptimalPoa(k)));

  if (!command.json_out.empty()) {
    Json doc;
    doc["instance"] = command.instance;
    doc["rule"] = spec.ToString();
    doc["cardinality"] = k;
    doc["optimal_welfare"] = ValueToText(report.optimal_welfare);
    doc["optimal_allocations"] = Json::array();
    for (const auto& a : report.optimal_allocations) {
      doc["optimal_allocations"].push_back(AllocationJson(problem, a));
    }
    doc["nash"] = Json::array();
    for (const auto& e : report.nash) {
      doc["nash"].push_back({{"allocation", AllocationJson(problem, e.allocation)},
                             {"welfare", ValueToText(e.welfare)}});
    }
    doc["worst_nash_welfare"] = ValueToText(report.worst_nash_welfare);
    doc["worst_ratio"] = report.worst_ratio.ToFraction();
    std::ofstream file(command.json_out);
    if (!file) throw ArgumentError("cannot write " + command.json_out);
    file << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int RunCounterexample(const CounterexampleCommand& command, std::ostream& out) {
  const std::vector<Rational> values = ParseValues(command.values);
  if (command.which == "i") return CounterexampleOneReport(values, out);
  if (command.which == "ii") return CounterexampleTwoReport(values, out);
  throw ArgumentError("--case must be i or ii");
}

int RunBench(const BenchCommand& command, std::ostream& out) {
  const ExperimentResult result = RunExperiment(command.config);
  if (!command.out.empty()) {
    std::ofstream file(command.out);
    if (!file) throw ArgumentError("cannot write " + command.out);
    WriteRowsCsv(file, result.rows);
  }
  if (!command.hist_out.empty()) {
    std::ofstream file(command.hist_out);
    if (!file) throw ArgumentError("cannot write " + command.hist_out);
    WriteHistogramCsv(file, result.rows, command.bin_width);
  }
  WriteSummaryTable(out, result.summary);
  const bool all_converged =
      std::all_of(result.summary.begin(), result.summary.end(),
                  [](const RuleSummary& s) { return s.not_converged == 0; });
  return all_converged ? kExitOk : kExitCap;
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Utility design for distributed covering games", "covering"};
  app.require_subcommand(1);

  RulesCommand rules;
  auto* rules_cmd = app.add_subcommand("rules", "Print a distribution rule with chi and poa");
  rules_cmd->add_option("--rule", rules.rule, "optimal:K, risky:P:KBAR or alg:L:N");
  rules_cmd->add_option("--file", rules.file, "Rule text file");
  rules_cmd->add_option("--extend-to", rules.extend_to, "Extend the rule constantly");
  rules_cmd->add_option("--k", rules.k, "Cardinality for chi and poa");

  PoaTableCommand table;
  auto* table_cmd = app.add_subcommand("poa-table", "Optimal poa by cardinality");
  table_cmd->add_option("--k-max", table.k_max, "Largest cardinality")->capture_default_str();
  table_cmd->add_option("--kbar", table.kbar, "Compare risky rules against f*_kbar");
  table_cmd->add_option("--k", table.k, "True cardinality for the comparison")
      ->capture_default_str();
  table_cmd->add_option("--p", table.p, "Risky levels, comma separated")->delimiter(',');

  DynamicsCommand dyn;
  auto* dyn_cmd = app.add_subcommand("dynamics", "Run best-response or learning dynamics");
  dyn_cmd->add_option("--instance", dyn.instance, "Instance file or builtin:NAME")->required();
  dyn_cmd->add_option("--rule", dyn.rule, "optimal[:K], risky:P:KBAR, alg:L:N or learning")
      ->capture_default_str();
  dyn_cmd->add_option("--schedule", dyn.schedule,
                      "round-robin[:OFFSET], random:SEED or perm:i1,i2,...")
      ->capture_default_str();
  dyn_cmd->add_option("--init", dyn.init, "first, random:SEED or file:PATH")
      ->capture_default_str();
  dyn_cmd->add_option("--max-rounds", dyn.max_rounds, "Cap on full passes")
      ->capture_default_str();
  dyn_cmd->add_option("--trace-out", dyn.trace_out, "Write the trace here");
  dyn_cmd->add_flag("--fast", dyn.fast, "Floating point instead of exact arithmetic");
  dyn_cmd->add_flag("--check-bound", dyn.check_bound,
                    "Compare against the brute-force optimum");

  OracleCommand oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum and equilibria");
  oracle_cmd->add_option("--instance", oracle.instance, "Instance file or builtin:NAME")
      ->required();
  oracle_cmd->add_option("--rule", oracle.rule, "Rule spec")->capture_default_str();
  oracle_cmd->add_option("--counters", oracle.counters, "x_1,...,x_m for --rule learning");
  oracle_cmd->add_option("--json-out", oracle.json_out, "Write the report as JSON");
  oracle_cmd->add_option("--max-joint", oracle.max_joint, "Enumeration cap")
      ->capture_default_str();

  CounterexampleCommand counter;
  auto* counter_cmd = app.add_subcommand("counterexample", "Verify the learning counterexamples");
  counter_cmd->add_option("--case", counter.which, "i or ii")->required();
  counter_cmd->add_option("--values", counter.values, "Resource values, comma separated")
      ->delimiter(',');

  BenchCommand bench;
  int require_k = 0;
  BenchConfig& cfg = bench.config;
  auto* bench_cmd = app.add_subcommand("bench", "Data caching experiment");
  bench_cmd->add_option("--instances", cfg.n_instances, "Number of instances")
      ->capture_default_str();
  bench_cmd->add_option("--seed", cfg.base_seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--rules", cfg.rules, "Rules, comma separated")->delimiter(',');
  bench_cmd->add_option("--kbar", cfg.kbar, "kbar completing risky:P")->capture_default_str();
  bench_cmd->add_option("--require-k", require_k, "Resample until cardinality is K");
  bench_cmd->add_option("--resample-cap", cfg.resample_cap, "Resampling attempts")
      ->capture_default_str();
  bench_cmd->add_option("--max-rounds", cfg.max_rounds, "Cap on full passes")
      ->capture_default_str();
  bench_cmd->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  bench_cmd->add_option("--grid", cfg.grid_side, "Grid side")->capture_default_str();
  bench_cmd->add_option("--stations", cfg.n_stations, "Stations")->capture_default_str();
  bench_cmd->add_option("--items", cfg.n_items, "Items")->capture_default_str();
  bench_cmd->add_option("--radius", cfg.radius, "Reach radius")->capture_default_str();
  bench_cmd->add_option("--capacity", cfg.capacity, "Items per station")
      ->capture_default_str();
  bench_cmd->add_option("--alpha", cfg.zipf_alpha, "Zipf exponent")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Per-row CSV");
  bench_cmd->add_option("--hist-out", bench.hist_out, "Histogram CSV");
  bench_cmd->add_option("--bin-width", bench.bin_width, "Histogram bin width")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*rules_cmd) return RunRules(rules, out);
    if (*table_cmd) return RunPoaTable(table, out);
    if (*dyn_cmd) return RunDynamics(dyn, out);
    if (*oracle_cmd) return RunOracle(oracle, out);
    if (*counter_cmd) return RunCounterexample(counter, out);
    if (*bench_cmd) {
      if (require_k != 0) cfg.require_k = require_k;
      return RunBench(bench, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  }
  return kExitValidation;
}

}  // namespace covering::cli
