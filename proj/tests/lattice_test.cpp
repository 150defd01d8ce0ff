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

#include "latkit/lattice.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "latkit/error.hpp"
#include "support/lattice_enum.hpp"

namespace latkit {
namespace {

using testing::DistributiveByScan;
using testing::EnumerateLattices;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

TEST(BuildLattice, ClosesCoversTransitively) {
  auto l = BuildLattice(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(l.leq(0, 2));
  EXPECT_EQ(l.bottom(), 0u);
  EXPECT_EQ(l.top(), 2u);
  EXPECT_EQ(l.join(0, 1), 1u);
}

TEST(BuildLattice, RejectsCycles) {
  EXPECT_EQ(CodeOf([] { BuildLattice(2, {{0, 1}, {1, 0}}); }),
            ErrorCode::kNotAPartialOrder);
}

TEST(BuildLattice, RejectsMissingJoin) {
  // two maximal elements
  EXPECT_EQ(CodeOf([] { BuildLattice(3, {{0, 1}, {0, 2}}); }),
            ErrorCode::kNotALattice);
  // bowtie: a, b below both c and d
  EXPECT_EQ(CodeOf([] {
              BuildLattice(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                               {3, 5}, {4, 5}});
            }),
            ErrorCode::kNotALattice);
}

TEST(BuildLattice, RejectsBadInput) {
  EXPECT_EQ(CodeOf([] { BuildLattice(0, {}); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { BuildLattice(2, {{0, 5}}); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { BuildLattice(2, {{0, 1}}, {"x"}); }),
            ErrorCode::kInvalidParameter);
}

TEST(StandardLattices, Shapes) {
  EXPECT_EQ(BooleanLattice(3).size(), 8u);
  EXPECT_EQ(MLattice(3).size(), 5u);
  EXPECT_EQ(Pentagon().size(), 5u);
  EXPECT_EQ(Hexagon().size(), 6u);
  EXPECT_EQ(Chain(4).size(), 4u);
  const auto n5 = Pentagon();
  const Element a = *n5.find_label("a"), b = *n5.find_label("b"),
                c = *n5.find_label("c");
  EXPECT_TRUE(n5.lt(a, b));
  EXPECT_EQ(n5.join(a, c), n5.top());
  EXPECT_EQ(n5.meet(b, c), n5.bottom());
  for (const auto& l : {BooleanLattice(2), MLattice(4), Pentagon(), Hexagon(), Chain(5)}) {
    EXPECT_TRUE(ValidateLatticeAxioms(l).empty());
  }
}

TEST(LatticeKind, ParsesAliases) {
  EXPECT_EQ(LatticeKind::Parse("m3").ToString(), "m(3)");
  EXPECT_EQ(LatticeKind::Parse("b2").ToString(), "boolean(2)");
  EXPECT_EQ(LatticeKind::Parse("n5").ToString(), "pentagon");
  EXPECT_EQ(LatticeKind::Parse("h").ToString(), "hexagon");
  EXPECT_EQ(LatticeKind::Parse("chain(4)").n, 4u);
  EXPECT_TRUE(LatticeKind::Parse("m(2)").degenerate());
  EXPECT_EQ(CodeOf([] { LatticeKind::Parse("lozenge"); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] { StandardLattice(LatticeKind::Parse("chain(0)")); }),
            ErrorCode::kInvalidParameter);
}

TEST(Enumeration, KnownCounts) {
  const std::size_t lattices[] = {1, 1, 1, 2, 5, 15};
  const std::size_t distributive[] = {1, 1, 1, 2, 3, 5};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto all = EnumerateLattices(n);
    EXPECT_EQ(all.size(), lattices[n - 1]) << n;
    std::size_t d = 0;
    for (const auto& l : all) d += DistributiveByScan(l);
    EXPECT_EQ(d, distributive[n - 1]) << n;
  }
}

TEST(Distributivity, ThreeMethodsAgreeUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& l : EnumerateLattices(n)) {
      const bool truth = DistributiveByScan(l);
      const auto forb = IsDistributive(l);
      EXPECT_EQ(forb.distributive, truth);
      EXPECT_EQ(!DistributiveLawViolation(l).has_value(), truth);
      EXPECT_EQ(BirkhoffOracle(l).distributive, truth);
      if (!forb.distributive) {
        const auto pattern = forb.pattern == "m3" ? MLattice(3) : Pentagon();
        ASSERT_TRUE(forb.witness);
        EXPECT_TRUE(IsEmbedding(pattern, l, forb.witness->map));
      }
    }
  }
}

TEST(Distributivity, M3WitnessIsIdentity) {
  const auto v = IsDistributive(MLattice(3));
  EXPECT_FALSE(v.distributive);
  EXPECT_EQ(v.pattern, "m3");
  EXPECT_EQ(v.witness->map, (std::vector<Element>{0, 1, 2, 3, 4}));
}

TEST(Distributivity, HexagonContainsPentagon) {
  const auto v = IsDistributive(Hexagon());
  EXPECT_FALSE(v.distributive);
  EXPECT_EQ(v.pattern, "pentagon");
  EXPECT_FALSE(FindSublatticeCopy(Hexagon(), MLattice(3)).has_value());
}

TEST(Birkhoff, BooleanCube) {
  const auto v = BirkhoffOracle(BooleanLattice(3));
  EXPECT_TRUE(v.distributive);
  EXPECT_EQ(v.join_irreducibles.size(), 3u);
  EXPECT_EQ(v.down_set_count, 8u);
}

TEST(Embedding, RejectsNonInjective) {
  EXPECT_FALSE(IsEmbedding(Chain(2), Chain(3), {0, 0}));
  EXPECT_TRUE(IsEmbedding(Chain(2), Chain(3), {0, 2}));
  // order preserving but not join preserving
  const auto b2 = BooleanLattice(2);
  EXPECT_FALSE(IsEmbedding(b2, BooleanLattice(3), {0, 1, 2, 7}));
}

TEST(Embedding, SearchBudget) {
  Budgets small;
  small.search_target = 4;
  EXPECT_EQ(CodeOf([&] { FindSublatticeCopy(Pentagon(), Chain(2), small); }),
            ErrorCode::kSizeLimit);
}

TEST(Constructions, DualIsInvolution) {
  for (const auto& l : EnumerateLattices(6)) {
    EXPECT_EQ(Dual(Dual(l)), l);
    EXPECT_TRUE(FindIsomorphism(Dual(l), Dual(l)).has_value());
  }
  EXPECT_TRUE(FindIsomorphism(MLattice(3), Dual(MLattice(3))).has_value());
  EXPECT_TRUE(FindIsomorphism(Pentagon(), Dual(Pentagon())).has_value());
}

TEST(Constructions, ProductOfChains) {
  const auto p = Product(Chain(2), Chain(2));
  EXPECT_EQ(p.size(), 4u);
  EXPECT_TRUE(FindIsomorphism(p, BooleanLattice(2)).has_value());
  EXPECT_TRUE(FindIsomorphism(Product(BooleanLattice(2), Chain(2)), BooleanLattice(3))
                  .has_value());
  Budgets small;
  small.lattice_elements = 10;
  EXPECT_EQ(CodeOf([&] { Product(Chain(4), Chain(4), small); }), ErrorCode::kSizeLimit);
}

TEST(Constructions, Doubling) {
  // doubling at the top adds one element; at the bottom doubles the lattice
  const auto c3 = Chain(3);
  EXPECT_EQ(DoublingExtension(c3, c3.top()).size(), 4u);
  EXPECT_TRUE(FindIsomorphism(DoublingExtension(c3, c3.bottom()), Product(c3, Chain(2)))
                  .has_value());
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& l : EnumerateLattices(n)) {
      for (Element a = 0; a < l.size(); ++a) {
        const auto d = DoublingExtension(l, a);
        EXPECT_TRUE(ValidateLatticeAxioms(d).empty());
        EXPECT_EQ(IsDistributive(d).distributive, IsDistributive(l).distributive);
      }
    }
  }
  EXPECT_EQ(CodeOf([] { DoublingExtension(Chain(2), 9); }), ErrorCode::kInvalidParameter);
}

TEST(Constructions, TwoOplusAndIdeals) {
  const auto l = TwoOplus(MLattice(3));
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(l.bottom(), 0u);
  EXPECT_EQ(l.upper_covers(0), (std::vector<Element>{1}));
  const auto n5 = Pentagon();
  const auto ideal = MakePrincipalIdeal(n5, *n5.find_label("b"));
  EXPECT_EQ(ideal.lattice.size(), 3u);
  EXPECT_EQ(ideal.members.size(), 3u);
}

TEST(Covers, HeightsAndCovers) {
  const auto b3 = BooleanLattice(3);
  EXPECT_EQ(b3.covers().size(), 12u);
  const auto h = b3.heights();
  EXPECT_EQ(h[0], 0u);
  EXPECT_EQ(h[7], 3u);
}

}  // namespace
}  // namespace latkit
