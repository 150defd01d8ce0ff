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

#ifndef LATKIT_TESTS_SUPPORT_ORACLES_HPP_
#define LATKIT_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/lattice.hpp"
#include "latkit/ranked.hpp"
#include "latkit/representation.hpp"

namespace latkit::testing {

// Partitions as lists of blocks, generated by the textbook recursion
// (insert the next point into each existing block or a new one).
std::vector<std::vector<std::vector<std::size_t>>> BlockPartitions(
    const std::vector<std::size_t>& points);

using PairSet = std::set<std::pair<std::size_t, std::size_t>>;

// n-CPP straight from the recursive definition, with relations as explicit
// pair sets restricted to the current subset.
bool NaiveNCpp(const Representation& rep, std::size_t depth);

// Every representation (injective, pseudo-representation laws) of `lattice`
// on a ground of the given size, one per isomorphism class under ground
// permutations.
std::vector<Representation> EnumerateReps(const FiniteLattice& lattice,
                                          std::size_t ground);

// Every partition of the carrier that passes a direct compatibility scan
// of all argument tuple pairs.
std::vector<EquivalenceRelation> CongruencesByFilter(const FiniteAlgebra& algebra);

// Cyclic groups, the Klein group, bare sets and seeded random unary and
// binary algebras on carriers 1..5, plus a nullary and a ternary example.
std::vector<FiniteAlgebra> AlgebraCorpus();

// Every map L -> L satisfying the rank axioms (and the optional conditions),
// by scanning all |L|^|L| maps. Checks are coded here independently.
std::vector<RankMap> BruteForceRanks(const FiniteLattice& lattice, bool blass,
                                     bool gaifman);

}  // namespace latkit::testing

#endif  // LATKIT_TESTS_SUPPORT_ORACLES_HPP_
