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

#include "latkit/json_io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "latkit/commands.hpp"
#include "latkit/dot.hpp"
#include "latkit/error.hpp"
#include "support/lattice_enum.hpp"

#ifndef LATKIT_GOLDEN_DIR
#define LATKIT_GOLDEN_DIR "tests/golden"
#endif

namespace latkit {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kNotALattice;  // sentinel, never expected here
}

bool SameRep(const Representation& a, const Representation& b) {
  return a.lattice == b.lattice && a.ground_size == b.ground_size &&
         a.alpha == b.alpha && a.decode == b.decode;
}

TEST(JsonRoundTrip, Lattices) {
  std::vector<FiniteLattice> all{BooleanLattice(3), MLattice(4), Pentagon(), Hexagon(),
                                 Chain(5), Dual(Pentagon())};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& l : testing::EnumerateLattices(n)) all.push_back(l);
  }
  for (const auto& l : all) {
    const auto text = LatticeToJson(l).dump();
    EXPECT_EQ(LatticeFromJson(ParseJsonText(text, "t")), l);
  }
}

TEST(JsonRoundTrip, FullOrderAndCoversAgree) {
  const auto j = ParseJsonText(
      R"j({"size":4,"leq":[[0,1],[0,2],[0,3],[1,3],[2,3]],"labels":["0","a","b","1"]})j", "t");
  EXPECT_EQ(LatticeFromJson(j), BooleanLattice(2));
  EXPECT_EQ(LatticeFromJson(ParseJsonText(R"j({"standard":"m(3)"})j", "t")), MLattice(3));
}

TEST(JsonRoundTrip, RelationsRepsAlgebras) {
  for (const auto& t : AllPartitions(5)) {
    EXPECT_EQ(EqFromJson(ParseJsonText(EqToJson(t).dump(), "t")), t);
  }
  for (const auto& rep : {PairsB2Rep(4), M3BaseRep(), PowerRep(M3BaseRep(), 2)}) {
    EXPECT_TRUE(SameRep(RepFromJson(ParseJsonText(RepToJson(rep).dump(), "t")), rep));
  }
  EXPECT_TRUE(SameRep(RepFromJson(ParseJsonText(R"j({"builtin":"pairs_b2","n":5})j", "t")),
                      PairsB2Rep(5)));
  for (const auto& a : {CyclicGroup(4), KleinGroup(), FiniteAlgebra::Make(2, {})}) {
    EXPECT_EQ(AlgebraFromJson(ParseJsonText(AlgebraToJson(a).dump(), "t")), a);
  }
  const auto n5 = Pentagon();
  const auto el = EquivalencedLattice::FromPairs(n5, {{2, 3}, {1, 4}});
  const auto back = ElatticeFromJson(ParseJsonText(ElatticeToJson(el).dump(), "t"));
  EXPECT_EQ(back.lattice, el.lattice);
  EXPECT_EQ(back.e, el.e);
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> values(10);
    for (auto& v : values) v = static_cast<std::int64_t>(rng() % 5) - 2;
    const auto f = PairFunction::FromValues(5, values);
    const auto g = PairFunctionFromJson(ParseJsonText(PairFunctionToJson(f).dump(), "t"));
    EXPECT_EQ(g.kernel, f.kernel);
    EXPECT_EQ(g.values, f.values);
  }
}

TEST(JsonRoundTrip, GroundInferredFromClasses) {
  EXPECT_EQ(EqFromJson(ParseJsonText(R"j({"classes":[[0,2],[1]]})j", "t")),
            EquivalenceRelation::FromClasses(3, {{0, 2}, {1}}));
  EXPECT_EQ(EqFromJson(ParseJsonText(R"j({"labels":[4,4,1]})j", "t")).ground_size(), 3u);
  EXPECT_THROW(EqFromJson(ParseJsonText(R"j({"classes":[[0],[2]]})j", "t")), Error);
  const auto rep = RepFromJson(ParseJsonText(
      R"j({"lattice":{"standard":"m3"},"ground":3,"alpha":{)j"
      R"j("0":{"classes":[[0,1,2]]},"a":{"classes":[[0],[1,2]]},)j"
      R"j("b":{"classes":[[0,2],[1]]},"c":{"classes":[[0,1],[2]]},)j"
      R"j("1":{"classes":[[0],[1],[2]]}}})j",
      "t"));
  EXPECT_EQ(rep.alpha, M3BaseRep().alpha);
}

TEST(JsonErrors, CarryLocation) {
  try {
    ParseJsonText("{\"size\": 3,,}", "bad.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("bad.json"), std::string::npos);
  }
  try {
    LatticeFromJson(ParseJsonText(R"j({"size":2,"leq":[[0,1],[1]]})j", "t"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("/leq/1"), std::string::npos);
  }
  EXPECT_EQ(CodeOf([] {
              LatticeFromJson(ParseJsonText(R"j({"size":3,"leq":[[0,1],[0,2]]})j", "t"));
            }),
            ErrorCode::kNotALattice);
  EXPECT_EQ(CodeOf([] {
              RepFromJson(ParseJsonText(
                  R"j({"lattice":{"standard":"chain(2)"},"ground":2,"alpha":{"0":{"ground":2,"classes":[[0,1]]}}})j",
                  "t"));
            }),
            ErrorCode::kParseError);
}

TEST(Budgets, JsonRoundTrip) {
  Budgets b;
  b.cpp_ground = 6;
  b.partitions = 7;
  const auto back = BudgetsFromJson(BudgetsToJson(b));
  EXPECT_EQ(back.cpp_ground, 6u);
  EXPECT_EQ(back.partitions, 7u);
  EXPECT_THROW(BudgetsFromJson(Json{{"nonsense", 1}}), Error);
}

TEST(Reports, Deterministic) {
  Json req{{"command", "rep cpp"},
           {"inputs", {{"rep", {{"name", "r"}, {"text", R"j({"builtin":"pairs_b2","n":4})j"}}}}},
           {"options", {{"depth", 1}}}};
  const auto a = RunCommand(req).report.dump();
  const auto b = RunCommand(req).report.dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Dot, GoldenDiagrams) {
  const std::pair<const char*, FiniteLattice> diagrams[] = {
      {"b2.dot", BooleanLattice(2)},
      {"m3.dot", MLattice(3)},
      {"n5.dot", Pentagon()},
      {"hexagon.dot", Hexagon()}};
  for (const auto& [file, lattice] : diagrams) {
    std::ifstream in(std::string(LATKIT_GOLDEN_DIR) + "/" + file);
    ASSERT_TRUE(in) << file;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(HasseDot(lattice), ss.str()) << file;
  }
}

}  // namespace
}  // namespace latkit
