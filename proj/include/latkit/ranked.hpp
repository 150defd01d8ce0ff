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

#ifndef LATKIT_RANKED_HPP_
#define LATKIT_RANKED_HPP_

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

using RankMap = std::vector<Element>;

// One failed instance of a rank axiom:
//   1: x <= rho(x)            witnesses {x}
//   2: rho(rho(x)) = rho(x)   witnesses {x}
//   3: rho(x), rho(y) comparable              witnesses {x, y}
//   4: rho(x v y) = rho(x) v rho(y)           witnesses {x, y}
struct RankViolation {
  int axiom = 0;
  std::vector<Element> witnesses;
};

struct RankAxiomReport {
  std::vector<RankViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Lists every violated instance. Throws InvalidParameter if rho is not a
// total map into the lattice.
RankAxiomReport VerifyRankAxioms(const FiniteLattice& lattice,
                                 std::span<const Element> rho);

class RankedLattice {
 public:
  // Throws InvalidParameter naming the first violated axiom.
  static RankedLattice Make(std::shared_ptr<const FiniteLattice> lattice,
                            RankMap rho);
  static RankedLattice Make(const FiniteLattice& lattice, RankMap rho);

  const FiniteLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const FiniteLattice>& shared_lattice() const {
    return lattice_;
  }
  const RankMap& rho() const { return rho_; }
  Element rank(Element x) const { return rho_[x]; }
  // Distinct rank values, bottom-most first (they form a chain).
  std::vector<Element> rankset() const;

 private:
  RankedLattice(std::shared_ptr<const FiniteLattice> l, RankMap rho)
      : lattice_(std::move(l)), rho_(std::move(rho)) {}

  std::shared_ptr<const FiniteLattice> lattice_;
  RankMap rho_;
};

// In a finite lattice every element is compact, so the condition is checked
// for all pairs: rho(x) = rho(y) implies rho(x) = rho(x ^ y).
struct BlassVerdict {
  bool holds = true;
  std::optional<ElementPair> witness;
};
BlassVerdict CheckBlass(const RankedLattice& ranked);

// No triple with x < y < x v z, z = rho(z), x ^ z = y ^ z.
struct GaifmanVerdict {
  bool holds = true;
  std::optional<std::array<Element, 3>> witness;
};
GaifmanVerdict CheckGaifman(const RankedLattice& ranked);

struct RankRequirements {
  bool blass = false;
  bool gaifman = false;
};

// Every rank map on the lattice passing the axioms and the requested
// conditions, in lexicographic order of the map vector.
std::vector<RankedLattice> EnumerateRanks(const FiniteLattice& lattice,
                                          RankRequirements require,
                                          const Budgets& budgets = {});

inline constexpr const char* kExternalPentagonFlag =
    "excluded_by_external_theorem:ks-4.6.1";

// Annotations for a rank report row. On a pentagon, rho(0) = b is admissible
// for both conditions but ruled out by an external theorem; such rows carry
// kExternalPentagonFlag instead of being dropped.
std::vector<std::string> RankFlags(const RankedLattice& ranked);

}  // namespace latkit

#endif  // LATKIT_RANKED_HPP_
