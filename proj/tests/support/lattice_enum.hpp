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

#ifndef LATKIT_TESTS_SUPPORT_LATTICE_ENUM_HPP_
#define LATKIT_TESTS_SUPPORT_LATTICE_ENUM_HPP_

#include <cstdint>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit::testing {

// Order matrix, row-major, leq[x * n + y].
using OrderMatrix = std::vector<std::uint8_t>;

// All lattices with exactly n elements, one per isomorphism class. Built by
// brute force: every strict order on the n - 2 middle elements compatible
// with the identity labeling, a fresh bottom and top, a direct
// upper-bound/lower-bound lattice test, and isomorphism classes by minimal
// order matrix over all relabelings.
std::vector<FiniteLattice> EnumerateLattices(std::size_t n);

// Checks every pair for a least upper bound and a greatest lower bound by
// scanning bounds directly.
bool IsLatticeOrder(std::size_t n, const OrderMatrix& leq);

// x ^ (y v z) = (x ^ y) v (x ^ z) for all triples, with meets and joins
// found by scanning bounds (independent of the library's tables).
bool DistributiveByScan(const FiniteLattice& lattice);

// Smallest order matrix over all relabelings fixing nothing in particular.
OrderMatrix CanonicalOrder(const FiniteLattice& lattice);

}  // namespace latkit::testing

#endif  // LATKIT_TESTS_SUPPORT_LATTICE_ENUM_HPP_
