// Copyright 2026 The latkit Authors
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

#ifndef LATKIT_COMMANDS_HPP_
#define LATKIT_COMMANDS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "latkit/budget.hpp"
#include "latkit/json_io.hpp"

namespace latkit {

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

Json BudgetsToJson(const Budgets& budgets);
// Unknown keys raise ParseError; missing keys keep their defaults.
Budgets BudgetsFromJson(const Json& j, Budgets base = {});

enum class Verdict { kNone = -1, kFalse = 0, kTrue = 1 };

struct CommandResult {
  Json report;
  Verdict verdict = Verdict::kNone;
  // Secondary output for commands that produce one (CSV, DOT).
  std::string artifact;
  std::string artifact_type;
};

// Request:
//   {"command": "analyze" | "ranks" | "rep verify" | "rep cpp" | "rep ranked" |
//               "rep family-closure" | "crt2" | "alg cg" | "alg check" |
//               "alg search" | "reasonable" | "export-dot" | "standard",
//    "echo": [...], "inputs": {"<role>": {"name": ..., "text": ...}},
//    "options": {...}, "budgets": {...}, "timings": false}
// Roles: lattice, rep, family, algebra, theta, function, elattice.
// Library errors propagate as latkit::Error.
CommandResult RunCommand(const Json& request);

}  // namespace latkit

#endif  // LATKIT_COMMANDS_HPP_
