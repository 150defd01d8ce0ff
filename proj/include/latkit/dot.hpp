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

#ifndef LATKIT_DOT_HPP_
#define LATKIT_DOT_HPP_

#include <string>

#include "latkit/lattice.hpp"

namespace latkit {

// Hasse diagram in Graphviz DOT: one edge per cover pair, drawn bottom to
// top, elements of equal height on one rank.
std::string HasseDot(const FiniteLattice& lattice, const std::string& name = "L");

}  // namespace latkit

#endif  // LATKIT_DOT_HPP_
