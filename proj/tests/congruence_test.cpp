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

#include "latkit/congruence.hpp"

#include <gtest/gtest.h>

#include <random>

#include "latkit/error.hpp"
#include "support/oracles.hpp"

namespace latkit {
namespace {

EquivalenceRelation Eq(std::vector<std::uint32_t> labels) {
  return EquivalenceRelation::FromLabels(labels);
}

TEST(FiniteAlgebra, Validation) {
  EXPECT_THROW(FiniteAlgebra::Make(0, {}), Error);
  EXPECT_THROW(FiniteAlgebra::Make(2, {Operation{1, {0}}}), Error);
  EXPECT_THROW(FiniteAlgebra::Make(2, {Operation{1, {0, 2}}}), Error);
}

TEST(IsCongruence, CyclicFour) {
  const auto z4 = CyclicGroup(4);
  EXPECT_TRUE(IsCongruence(EquivalenceRelation::Discrete(4), z4).holds);
  EXPECT_TRUE(IsCongruence(EquivalenceRelation::Trivial(4), z4).holds);
  EXPECT_TRUE(IsCongruence(Eq({0, 1, 0, 1}), z4).holds);
  const auto v = IsCongruence(Eq({0, 0, 1, 1}), z4);
  ASSERT_FALSE(v.holds);
  const auto& w = *v.witness;
  EXPECT_EQ(w.op, 0u);
  EXPECT_EQ(w.a, (std::vector<std::uint32_t>{0, 0}));
  EXPECT_EQ(w.b, (std::vector<std::uint32_t>{1, 1}));
  EXPECT_THROW(IsCongruence(EquivalenceRelation::Trivial(3), z4), Error);
}

TEST(PrincipalCongruence, CyclicFour) {
  const auto z4 = CyclicGroup(4);
  EXPECT_EQ(PrincipalCongruence(z4, 2, 2), EquivalenceRelation::Discrete(4));
  EXPECT_EQ(PrincipalCongruence(z4, 0, 2), Eq({0, 1, 0, 1}));
  EXPECT_EQ(PrincipalCongruence(z4, 0, 1), EquivalenceRelation::Trivial(4));
  EXPECT_THROW(PrincipalCongruence(z4, 0, 4), Error);
}

TEST(CongruenceLattice, KnownShapes) {
  const auto z4 = ComputeCongruenceLattice(CyclicGroup(4));
  EXPECT_TRUE(FindIsomorphism(z4.lattice, Chain(3)).has_value());
  const auto klein = ComputeCongruenceLattice(KleinGroup());
  EXPECT_TRUE(FindIsomorphism(klein.lattice, MLattice(3)).has_value());
  const auto bare = ComputeCongruenceLattice(FiniteAlgebra::Make(3, {}));
  EXPECT_EQ(bare.lattice.size(), 5u);
  EXPECT_TRUE(bare.members[bare.lattice.bottom()].is_discrete());
  EXPECT_TRUE(bare.members[bare.lattice.top()].is_trivial());
}

TEST(CongruenceLattice, AgreesWithFilterOracle) {
  for (const auto& a : testing::AlgebraCorpus()) {
    const auto cg = ComputeCongruenceLattice(a);
    auto members = cg.members;
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, testing::CongruencesByFilter(a));
    EXPECT_EQ(cg.join_repairs, 0u);
    EXPECT_TRUE(ValidateLatticeAxioms(cg.lattice).empty());
    for (Element x = 0; x < cg.lattice.size(); ++x) {
      EXPECT_TRUE(IsCongruence(cg.members[x], a).holds);
      for (Element y = 0; y < cg.lattice.size(); ++y) {
        EXPECT_EQ(cg.lattice.leq(x, y), cg.members[x].refines(cg.members[y]));
      }
    }
    // principal congruences are least
    for (std::size_t p = 0; p < a.carrier_size(); ++p) {
      for (std::size_t q = p + 1; q < a.carrier_size(); ++q) {
        const auto pc = PrincipalCongruence(a, p, q);
        for (const auto& m : members) {
          if (m.related(p, q)) {
            EXPECT_TRUE(pc.refines(m));
          }
        }
      }
    }
  }
}

TEST(CongruenceLattice, Budget) {
  Budgets small;
  small.carrier = 3;
  EXPECT_THROW(ComputeCongruenceLattice(CyclicGroup(4), small), Error);
}

TEST(CongruenceRepresentation, Examples) {
  const auto chain = IsCongruenceRepresentation(Chain(3), CyclicGroup(4));
  EXPECT_TRUE(chain.holds);
  const auto m3 = IsCongruenceRepresentation(MLattice(3), KleinGroup());
  ASSERT_TRUE(m3.holds);
  // the map reverses order
  const auto& iso = *m3.isomorphism;
  EXPECT_TRUE(m3.congruences.members[iso[0]].is_trivial());
  EXPECT_TRUE(m3.congruences.members[iso[4]].is_discrete());
  EXPECT_FALSE(IsCongruenceRepresentation(Pentagon(), CyclicGroup(4)).holds);
}

TEST(SearchAlgebra, Examples) {
  const auto c2 = SearchAlgebra(Chain(2));
  ASSERT_TRUE(c2.algebra);
  EXPECT_EQ(c2.algebra->carrier_size(), 2u);
  EXPECT_TRUE(c2.algebra->ops().empty());

  const auto m3 = SearchAlgebra(MLattice(3));
  ASSERT_TRUE(m3.algebra);
  EXPECT_EQ(m3.algebra->carrier_size(), 3u);
  EXPECT_TRUE(FindIsomorphism(ComputeCongruenceLattice(*m3.algebra).lattice, MLattice(3))
                  .has_value());

  AlgebraSearchOptions three;
  three.max_carrier = 3;
  EXPECT_FALSE(SearchAlgebra(Pentagon(), three).algebra.has_value());

  const auto c3 = SearchAlgebra(Chain(3));
  ASSERT_TRUE(c3.algebra);
  EXPECT_TRUE(FindIsomorphism(ComputeCongruenceLattice(*c3.algebra).lattice, Chain(3))
                  .has_value());

  AlgebraSearchOptions too_big;
  too_big.max_carrier = 6;
  EXPECT_THROW(SearchAlgebra(Chain(2), too_big), Error);
}

TEST(SearchAlgebra, BinaryBudget) {
  AlgebraSearchOptions o;
  o.max_carrier = 4;
  o.max_binary_ops = 1;
  EXPECT_THROW(SearchAlgebra(Pentagon(), o), Error);
}

}  // namespace
}  // namespace latkit
