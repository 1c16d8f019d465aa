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

#ifndef COVERING_INSTANCE_IO_HPP_
#define COVERING_INSTANCE_IO_HPP_

// JSON instance and allocation files.
//
// Instance:
//   {
//     "agents": 3,                      // or ["p1", "p2", "p3"]
//     "resources": [{"id": "r1", "value": "9.5"}, ...],
//     "action_sets": [
//       {"type": "explicit", "actions": [["r1"], ["r2", "r3"], []]},
//       {"type": "capacity", "accessible": ["r1", "r2"], "capacity": 2}
//     ]
//   }
// Values are decimal strings ("9.5", "1e-3") or exact fractions ("1/3").
//
// Allocation: one array of resource ids per agent, e.g. [["r2"], ["r3"], []].

#include <filesystem>
#include <string>
#include <string_view>

#include "covering/game.hpp"

namespace covering {

CoveringProblem ParseInstance(std::string_view json_text);
CoveringProblem LoadInstance(const std::filesystem::path& path);
std::string InstanceToJson(const CoveringProblem& problem);

Allocation ParseAllocation(const CoveringProblem& problem,
                           std::string_view json_text);
Allocation LoadAllocation(const CoveringProblem& problem,
                          const std::filesystem::path& path);
std::string AllocationToJson(const CoveringProblem& problem,
                             const Allocation& allocation);

// Decimal text when the value terminates in base ten, "num/den" otherwise.
std::string ValueToText(const Rational& value);
Rational ValueFromText(std::string_view text);

std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace covering

#endif  // COVERING_INSTANCE_IO_HPP_
