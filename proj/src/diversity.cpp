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

#include "latkit/diversity.hpp"

#include <algorithm>
#include <numeric>

#include "latkit/error.hpp"

namespace latkit {

EquivalencedLattice EquivalencedLattice::Make(FiniteLattice lattice,
                                              EquivalenceRelation e) {
  if (e.ground_size() != lattice.size()) {
    Fail(ErrorCode::kGroundMismatch,
         "E is on " + std::to_string(e.ground_size()) +
             " points but the lattice has " + std::to_string(lattice.size()) +
             " elements");
  }
  return {std::move(lattice), std::move(e)};
}

EquivalencedLattice EquivalencedLattice::FromPairs(
    FiniteLattice lattice, const std::vector<ElementPair>& pairs) {
  DisjointSets sets(lattice.size());
  for (auto [a, b] : pairs) {
    if (a >= lattice.size() || b >= lattice.size()) {
      Fail(ErrorCode::kInvalidParameter, "E pair mentions a non-element");
    }
    sets.unite(a, b);
  }
  auto e = sets.ToRelation();
  return Make(std::move(lattice), std::move(e));
}

ReasonableVerdict IsReasonable(const EquivalencedLattice& el,
                               const ReasonableOptions& options,
                               const Budgets& budgets) {
  const auto& l = el.lattice;
  const std::size_t n = l.size();
  std::vector<std::vector<Element>> ideal(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (l.leq(y, x)) ideal[x].push_back(y);
    }
  }
  std::vector<ElementPair> pairs;
  ReasonableVerdict v;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!el.e.related(a, b)) continue;
      pairs.emplace_back(a, b);
      if (!v.obstruction && ideal[a].size() != ideal[b].size()) {
        v.obstruction = ElementPair{a, b};
      }
    }
  }
  if (options.use_fast_path && v.obstruction) {
    v.fast_path_used = true;
    return v;
  }
  if (n > budgets.reasonable_elements) {
    FailBudget("reasonable_elements", n, budgets.reasonable_elements);
  }
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> pos(n);
  std::vector<Element> i_sorted, j_sorted;
  auto by_pos = [&](Element x, Element y) { return pos[x] < pos[y]; };
  do {
    ++v.orders_examined;
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
    bool ok = true;
    for (auto [a, b] : pairs) {
      if (ideal[a].size() != ideal[b].size()) {
        ok = false;
        break;
      }
      i_sorted = ideal[a];
      j_sorted = ideal[b];
      std::sort(i_sorted.begin(), i_sorted.end(), by_pos);
      std::sort(j_sorted.begin(), j_sorted.end(), by_pos);
      for (std::size_t k = 0; k < i_sorted.size() && ok; ++k) {
        ok = el.e.related(i_sorted[k], j_sorted[k]);
      }
      if (!ok) break;
    }
    if (ok) {
      v.reasonable = true;
      v.order = order;
      return v;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return v;
}

}  // namespace latkit
