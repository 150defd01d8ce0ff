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

#ifndef LATKIT_CONGRUENCE_HPP_
#define LATKIT_CONGRUENCE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "latkit/budget.hpp"
#include "latkit/eqrel.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Argument tuples are indexed in base carrier_size, first argument most
// significant.
struct Operation {
  std::size_t arity = 0;
  std::vector<std::uint32_t> table;
};

class FiniteAlgebra {
 public:
  // Throws InvalidParameter on a short table or an out-of-carrier entry.
  static FiniteAlgebra Make(std::size_t carrier_size, std::vector<Operation> ops);

  std::size_t carrier_size() const { return carrier_; }
  const std::vector<Operation>& ops() const { return ops_; }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.carrier_ != b.carrier_ || a.ops_.size() != b.ops_.size()) return false;
    for (std::size_t i = 0; i < a.ops_.size(); ++i) {
      if (a.ops_[i].arity != b.ops_[i].arity || a.ops_[i].table != b.ops_[i].table) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t carrier_ = 0;
  std::vector<Operation> ops_;
};

// (Z_n, +) with one binary operation.
FiniteAlgebra CyclicGroup(std::size_t n);
// (Z_2 x Z_2, +); element 2u + v stands for (u, v).
FiniteAlgebra KleinGroup();

struct CongruenceVerdict {
  bool holds = true;
  // First failure: argument tuples a ~ b (componentwise) whose images are
  // not related under operation `op`.
  struct Witness {
    std::size_t op = 0;
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
  };
  std::optional<Witness> witness;
};

// Throws GroundMismatch when theta is not on the carrier.
CongruenceVerdict IsCongruence(const EquivalenceRelation& theta,
                               const FiniteAlgebra& algebra);

// Least congruence containing theta.
EquivalenceRelation CongruenceGenerated(const FiniteAlgebra& algebra,
                                        const EquivalenceRelation& theta);
// Least congruence relating a and b.
EquivalenceRelation PrincipalCongruence(const FiniteAlgebra& algebra,
                                        std::size_t a, std::size_t b);

// Con(A) ordered by inclusion: the equality relation is the bottom. Member i
// is the congruence at lattice element i; members are sorted by decreasing
// class count, then by class-id vector.
struct CongruenceLattice {
  FiniteLattice lattice = Chain(1);
  std::vector<EquivalenceRelation> members;
  // Joins (computed in Eq) that were not already congruences. Always zero
  // for a correct implementation; kept as a self-check.
  std::size_t join_repairs = 0;
};
CongruenceLattice ComputeCongruenceLattice(const FiniteAlgebra& algebra,
                                           const Budgets& budgets = {});

struct CongruenceRepVerdict {
  bool holds = false;
  CongruenceLattice congruences;
  // L element -> index into congruences.members, an isomorphism of L with
  // the dual of Con(A).
  std::optional<std::vector<Element>> isomorphism;
};
CongruenceRepVerdict IsCongruenceRepresentation(const FiniteLattice& lattice,
                                                const FiniteAlgebra& algebra,
                                                const Budgets& budgets = {});

struct AlgebraSearchOptions {
  std::size_t max_carrier = 4;
  std::size_t max_unary_ops = 2;
  std::size_t max_binary_ops = 0;
  // Look for Con(A) isomorphic to the dual of L instead of L itself.
  bool match_dual = false;
};

struct AlgebraSearchResult {
  std::optional<FiniteAlgebra> algebra;
  std::optional<std::vector<Element>> isomorphism;  // target -> Con(A) member
  std::uint64_t candidates = 0;  // operation tuples examined
  // Stopped after budgets.search_tables candidates.
  bool budget_exhausted = false;
};

// Enumerates carriers 1..max_carrier, then unary-op counts 0..max_unary_ops,
// then binary-op counts 0..max_binary_ops; operations of one arity are
// sets of distinct tables in lexicographic order. Returns the first algebra
// whose congruence lattice matches. A miss only says nothing was found
// within these bounds. Carriers above 5 are refused.
AlgebraSearchResult SearchAlgebra(const FiniteLattice& lattice,
                                  const AlgebraSearchOptions& options = {},
                                  const Budgets& budgets = {});

}  // namespace latkit

#endif  // LATKIT_CONGRUENCE_HPP_
