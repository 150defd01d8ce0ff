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

#ifndef LATKIT_BUDGET_HPP_
#define LATKIT_BUDGET_HPP_

#include <cstddef>

namespace latkit {

// Exhaustive searches refuse inputs beyond these sizes instead of
// approximating. All limits can be raised by the caller.
struct Budgets {
  std::size_t lattice_elements = 4096;   // constructors (product, doubling)
  std::size_t search_target = 64;        // sublattice / isomorphism search
  std::size_t rank_elements = 8;         // enumerate_ranks
  std::size_t birkhoff_irreducibles = 20;
  std::size_t cpp_ground = 8;            // is_ncpp, family closure
  std::size_t iso_ground = 16;           // reps_isomorphic
  std::size_t power_ground = 4096;       // power_rep
  std::size_t carrier = 7;               // congruence_lattice
  std::size_t reasonable_elements = 8;   // is_reasonable
  std::size_t partitions = 200000;       // crt2_survey kernels
  std::size_t search_tables = 5000000;   // search_algebra candidate algebras
};

}  // namespace latkit

#endif  // LATKIT_BUDGET_HPP_
