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

#include "latkit/eqrel.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "latkit/error.hpp"

namespace latkit {
namespace {

EquivalenceRelation Eq(std::vector<std::uint32_t> labels) {
  return EquivalenceRelation::FromLabels(labels);
}

TEST(EquivalenceRelation, CanonicalLabels) {
  EXPECT_EQ(Eq({5, 5, 2, 9}).class_ids(), (std::vector<std::uint32_t>{0, 0, 1, 2}));
  EXPECT_EQ(Eq({1, 0, 1}), Eq({7, 3, 7}));
  EXPECT_EQ(Eq({1, 0, 1}).num_classes(), 2u);
  EXPECT_TRUE(EquivalenceRelation::Trivial(4).is_trivial());
  EXPECT_TRUE(EquivalenceRelation::Discrete(4).is_discrete());
}

TEST(EquivalenceRelation, FromClassesValidates) {
  auto t = EquivalenceRelation::FromClasses(4, {{0, 2}, {1, 3}});
  EXPECT_EQ(t, Eq({0, 1, 0, 1}));
  EXPECT_THROW(EquivalenceRelation::FromClasses(3, {{0, 1}}), Error);
  EXPECT_THROW(EquivalenceRelation::FromClasses(3, {{0, 1}, {1, 2}}), Error);
  EXPECT_THROW(EquivalenceRelation::FromClasses(2, {{0, 5}}), Error);
}

TEST(EquivalenceRelation, MeetJoinRefine) {
  const auto a = Eq({0, 0, 1, 1});
  const auto b = Eq({0, 1, 1, 2});
  EXPECT_EQ(MeetEq(a, b), EquivalenceRelation::Discrete(4));
  EXPECT_EQ(JoinEq(a, b), EquivalenceRelation::Trivial(4));
  EXPECT_TRUE(EquivalenceRelation::Discrete(4).refines(a));
  EXPECT_FALSE(a.refines(b));
  EXPECT_THROW(MeetEq(a, Eq({0, 0})), Error);
  EXPECT_THROW(a.refines(Eq({0})), Error);
}

TEST(EquivalenceRelation, MeetAndJoinAreBoundsOnFour) {
  const auto all = AllPartitions(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto m = MeetEq(a, b), j = JoinEq(a, b);
      EXPECT_TRUE(m.refines(a) && m.refines(b));
      EXPECT_TRUE(a.refines(j) && b.refines(j));
      for (const auto& c : all) {
        if (c.refines(a) && c.refines(b)) {
          EXPECT_TRUE(c.refines(m));
        }
        if (a.refines(c) && b.refines(c)) {
          EXPECT_TRUE(j.refines(c));
        }
      }
    }
  }
}

TEST(EquivalenceRelation, Restrict) {
  const auto t = Eq({0, 1, 0, 2, 1});
  EXPECT_EQ(RestrictEq(t, std::vector<std::size_t>{4, 1, 0}), Eq({0, 1, 1}));
  EXPECT_THROW(RestrictEq(t, std::vector<std::size_t>{}), Error);
  EXPECT_THROW(RestrictEq(t, std::vector<std::size_t>{7}), Error);
}

TEST(EquivalenceRelation, Stats) {
  const auto s = ComputeEqStats(Eq({0, 1, 0, 2, 0}));
  EXPECT_EQ(s.num_classes, 3u);
  EXPECT_EQ(s.class_sizes, (std::vector<std::size_t>{3, 1, 1}));
  EXPECT_EQ(EqText(Eq({0, 1, 0, 2})), "02|1|3");
}

TEST(Partitions, BellNumbersAndOrder) {
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(BellNumber(n), bell[n]);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = AllPartitions(n);
    EXPECT_EQ(all.size(), bell[n]);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<EquivalenceRelation>(all.begin(), all.end()).size(), all.size());
  }
  std::size_t seen = 0;
  ForEachPartition(5, [&](const EquivalenceRelation&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3u);
}

TEST(Partitions, EqLattice) {
  const auto eq3 = MakeEqLattice(3);
  EXPECT_EQ(eq3.lattice.size(), 5u);
  EXPECT_TRUE(FindIsomorphism(eq3.lattice, MLattice(3)).has_value());
  EXPECT_TRUE(eq3.members[eq3.lattice.bottom()].is_discrete());
  EXPECT_TRUE(eq3.members[eq3.lattice.top()].is_trivial());
  const auto eq4 = MakeEqLattice(4);
  EXPECT_EQ(eq4.lattice.size(), 15u);
  EXPECT_TRUE(ValidateLatticeAxioms(eq4.lattice).empty());
  for (Element x = 0; x < eq4.lattice.size(); ++x) {
    for (Element y = 0; y < eq4.lattice.size(); ++y) {
      EXPECT_EQ(eq4.members[eq4.lattice.meet(x, y)],
                MeetEq(eq4.members[x], eq4.members[y]));
      EXPECT_EQ(eq4.members[eq4.lattice.join(x, y)],
                JoinEq(eq4.members[x], eq4.members[y]));
    }
  }
}

TEST(DisjointSets, Unite) {
  DisjointSets d(5);
  EXPECT_TRUE(d.unite(0, 3));
  EXPECT_FALSE(d.unite(3, 0));
  EXPECT_TRUE(d.unite(4, 3));
  EXPECT_EQ(d.ToRelation(), Eq({0, 1, 2, 0, 0}));
}

TEST(KernelOf, RandomRecodingInvariant) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> values(9);
    for (auto& v : values) v = static_cast<int>(rng() % 4);
    std::vector<long> recoded(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) recoded[i] = 1000 - 17L * values[i];
    EXPECT_EQ(KernelOf(values), KernelOf(recoded));
  }
}

}  // namespace
}  // namespace latkit
