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

#ifndef LATKIT_DIVERSITY_HPP_
#define LATKIT_DIVERSITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "latkit/budget.hpp"
#include "latkit/eqrel.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// A lattice together with an equivalence relation on its elements.
struct EquivalencedLattice {
  FiniteLattice lattice = Chain(1);
  EquivalenceRelation e;

  // Throws GroundMismatch unless e lives on exactly the lattice's elements.
  static EquivalencedLattice Make(FiniteLattice lattice, EquivalenceRelation e);
  // e generated by the given element pairs.
  static EquivalencedLattice FromPairs(FiniteLattice lattice,
                                       const std::vector<ElementPair>& pairs);
};

struct ReasonableOptions {
  // Reject immediately when some E-related pair has principal ideals of
  // different sizes.
  bool use_fast_path = true;
};

struct ReasonableVerdict {
  bool reasonable = false;
  // Elements listed from least to greatest in the witnessing linear order.
  std::optional<std::vector<Element>> order;
  // An E-pair whose principal ideals differ in size, when one exists.
  std::optional<ElementPair> obstruction;
  bool fast_path_used = false;
  std::uint64_t orders_examined = 0;
};

// Searches all linear orders of the elements (lexicographically, as
// permutations) for one under which every E-pair (a, b) has an E-compatible
// order isomorphism between the ideals below a and below b. Throws SizeLimit
// past budgets.reasonable_elements.
ReasonableVerdict IsReasonable(const EquivalencedLattice& el,
                               const ReasonableOptions& options = {},
                               const Budgets& budgets = {});

}  // namespace latkit

#endif  // LATKIT_DIVERSITY_HPP_
