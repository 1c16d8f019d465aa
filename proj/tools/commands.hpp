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

#ifndef COVERING_TOOLS_COMMANDS_HPP_
#define COVERING_TOOLS_COMMANDS_HPP_

// Subcommands of the `covering` executable. Each writes its report to `out`
// and returns a process exit code.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "covering/experiment.hpp"
#include "covering/game.hpp"

namespace covering::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitAssertion = 3;
inline constexpr int kExitCap = 4;

// A JSON instance path, or builtin:counterexample-i / builtin:counterexample-ii.
CoveringProblem LoadProblem(std::string_view source);

struct RulesCommand {
  std::string rule;  // optimal:K, risky:P:KBAR or alg:L:N
  std::string file;  // rule text file instead of `rule`
  int extend_to = 0;
  int k = 0;  // cardinality for chi and poa; defaults to the rule length
};
int RunRules(const RulesCommand& command, std::ostream& out);

struct PoaTableCommand {
  int k_max = 10;
  int kbar = 0;  // enables the risky comparison
  int k = 3;
  std::vector<int> p;  // defaults to 2..kbar-1
};
int RunPoaTable(const PoaTableCommand& command, std::ostream& out);

struct DynamicsCommand {
  std::string instance;
  std::string rule = "learning";
  std::string schedule = "round-robin";
  std::string init = "first";  // first | random:SEED | file:PATH
  long max_rounds = 10000;
  std::string trace_out;
  bool fast = false;
  bool check_bound = false;
};
int RunDynamics(const DynamicsCommand& command, std::ostream& out);

struct OracleCommand {
  std::string instance;
  std::string rule = "optimal";
  std::string counters;  // x_1,...,x_m for the learning rule
  std::string json_out;
  std::uint64_t max_joint = 1'000'000;
};
int RunOracle(const OracleCommand& command, std::ostream& out);

struct CounterexampleCommand {
  std::string which;  // i or ii
  std::vector<std::string> values;
};
int RunCounterexample(const CounterexampleCommand& command, std::ostream& out);

struct BenchCommand {
  BenchConfig config;
  std::string out;
  std::string hist_out;
  double bin_width = 0.002;
};
int RunBench(const BenchCommand& command, std::ostream& out);

// Full command line handling, including the mapping of exceptions to exit
// codes.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace covering::cli

#endif  // COVERING_TOOLS_COMMANDS_HPP_
