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

#ifndef LATKIT_JSON_IO_HPP_
#define LATKIT_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "latkit/budget.hpp"
#include "latkit/congruence.hpp"
#include "latkit/diversity.hpp"
#include "latkit/eqrel.hpp"
#include "latkit/lattice.hpp"
#include "latkit/ramsey.hpp"
#include "latkit/ranked.hpp"
#include "latkit/representation.hpp"

namespace latkit {

using Json = nlohmann::ordered_json;

// Parses text, raising ParseError with `source` and the byte offset.
Json ParseJsonText(std::string_view text, std::string_view source);

// Lattices: {"size", "leq": [[i, j], ...], "labels", "covers"} or
// {"standard": "m(3)"}. Emission lists cover pairs with "covers": true.
Json LatticeToJson(const FiniteLattice& lattice);
FiniteLattice LatticeFromJson(const Json& j, const Budgets& budgets = {},
                              const std::string& path = "");

// An element given either as an index or as a label.
Element ElementFromJson(const FiniteLattice& lattice, const Json& j,
                        const std::string& path);
Json ElementToJson(const FiniteLattice& lattice, Element x);

// {"ground", "classes": [[...], ...]}; {"ground", "labels": [...]} is also
// accepted. Without "ground" the classes (or labels) fix the ground size.
Json EqToJson(const EquivalenceRelation& t);
EquivalenceRelation EqFromJson(const Json& j, const std::string& path = "");

// {"lattice", "ground", "alpha": {"<element>": eqrel}, "decode"} or
// {"builtin": "pairs_b2", "n": 4} / {"builtin": "m3_base"} /
// {"builtin": "power", "base": <rep>, "m": 2}.
Json RepToJson(const Representation& rep);
Representation RepFromJson(const Json& j, const Budgets& budgets = {},
                           const std::string& path = "");

// A list of representations.
std::vector<Representation> FamilyFromJson(const Json& j,
                                           const Budgets& budgets = {});

// {"size", "ops": [{"arity", "table"}]} or {"builtin": "cyclic", "n": 4} /
// {"builtin": "klein"}.
Json AlgebraToJson(const FiniteAlgebra& algebra);
FiniteAlgebra AlgebraFromJson(const Json& j, const std::string& path = "");

// Lattice JSON plus "E": [[i, j], ...] (generating pairs).
Json ElatticeToJson(const EquivalencedLattice& el);
EquivalencedLattice ElatticeFromJson(const Json& j, const Budgets& budgets = {});

// {"n", "values": [...]} over pairs in lexicographic order, or
// {"n", "kernel": eqrel}.
Json PairFunctionToJson(const PairFunction& f);
PairFunction PairFunctionFromJson(const Json& j);

Json RankRowToJson(const RankedLattice& ranked, bool blass, bool gaifman);
Json CertificateToJson(const CppCertificate& cert, const Representation& rep);

}  // namespace latkit

#endif  // LATKIT_JSON_IO_HPP_
