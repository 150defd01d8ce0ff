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

#include "latkit/dot.hpp"

#include <map>
#include <sstream>

namespace latkit {

namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string HasseDot(const FiniteLattice& lattice, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << Quote(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, width=0.3, fixedsize=false];\n";
  out << "  edge [arrowhead=none];\n";
  for (Element x = 0; x < lattice.size(); ++x) {
    out << "  n" << x << " [label=" << Quote(lattice.label(x)) << "];\n";
  }
  std::map<std::size_t, std::vector<Element>> levels;
  const auto heights = lattice.heights();
  for (Element x = 0; x < lattice.size(); ++x) levels[heights[x]].push_back(x);
  for (const auto& [h, xs] : levels) {
    out << "  { rank=same;";
    for (auto x : xs) out << " n" << x << ";";
    out << " }\n";
  }
  for (auto [x, y] : lattice.covers()) {
    out << "  n" << x << " -> n" << y << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace latkit
