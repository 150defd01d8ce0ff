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

#ifndef LATKIT_LATTICE_HPP_
#define LATKIT_LATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/budget.hpp"

namespace latkit {

// Lattice elements are dense indices 0..size-1. Labels are cosmetic.
using Element = std::uint32_t;
using ElementPair = std::pair<Element, Element>;

// A finite bounded lattice. Instances are immutable and always valid: the
// only ways to obtain one are the constructors below, all of which validate
// the order and derive the meet/join tables.
class FiniteLattice {
 public:
  std::size_t size() const { return size_; }
  bool leq(Element x, Element y) const { return leq_[x * size_ + y] != 0; }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const {
    return leq(x, y) || leq(y, x);
  }
  Element meet(Element x, Element y) const { return meet_[x * size_ + y]; }
  Element join(Element x, Element y) const { return join_[x * size_ + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  const std::vector<std::string>& labels() const { return labels_; }
  // The element's label, or its decimal index when the lattice is unlabeled.
  std::string label(Element x) const;
  // Index of the element carrying `label`, if any.
  std::optional<Element> find_label(std::string_view label) const;

  // Cover pairs (x, y) with x < y and nothing strictly between, sorted.
  std::vector<ElementPair> covers() const;
  std::vector<Element> lower_covers(Element x) const;
  std::vector<Element> upper_covers(Element x) const;
  // Length of the longest chain from bottom to x.
  std::vector<std::size_t> heights() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.size_ == b.size_ && a.leq_ == b.leq_ && a.labels_ == b.labels_;
  }

 private:
  friend class LatticeBuilder;

  std::size_t size_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<std::string> labels_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Closes `leq_pairs` reflexively and transitively, then validates.
// Throws NotAPartialOrder / NotALattice with a witness pair in the message.
FiniteLattice BuildLattice(std::size_t size,
                           const std::vector<ElementPair>& leq_pairs,
                           std::vector<std::string> labels = {},
                           const Budgets& budgets = {});

// Full order/meet/join/absorption re-check. Returns human-readable violations;
// empty means the lattice satisfies every axiom.
std::vector<std::string> ValidateLatticeAxioms(const FiniteLattice& lattice);

struct LatticeKind {
  enum class Family { kBoolean, kM, kPentagon, kHexagon, kChain };
  Family family = Family::kChain;
  std::size_t n = 1;

  // "boolean(3)", "b3", "m(3)", "m3", "pentagon", "n5", "hexagon", "h",
  // "chain(4)".
  static LatticeKind Parse(std::string_view text);
  std::string ToString() const;
  // m(n) with n < 3 is accepted but distributive, hence flagged.
  bool degenerate() const { return family == Family::kM && n < 3; }
};

FiniteLattice StandardLattice(const LatticeKind& kind,
                              const Budgets& budgets = {});
FiniteLattice BooleanLattice(std::size_t n);
FiniteLattice MLattice(std::size_t n);
FiniteLattice Pentagon();
FiniteLattice Hexagon();
FiniteLattice Chain(std::size_t k);

FiniteLattice Dual(const FiniteLattice& lattice);
// Componentwise order; element (i, j) has index i * |second| + j.
FiniteLattice Product(const FiniteLattice& first, const FiniteLattice& second,
                      const Budgets& budgets = {});
// {(r, i) in L x 2 : i = 0 or r >= a}, ordered componentwise. Elements are
// listed as all (r, 0) first, then the (r, 1) in increasing r.
FiniteLattice DoublingExtension(const FiniteLattice& lattice, Element a,
                                const Budgets& budgets = {});
// New bottom at index 0; old element x moves to x + 1.
FiniteLattice TwoOplus(const FiniteLattice& lattice);

// The ideal {x : x <= a} and the original index of each of its elements.
struct PrincipalIdeal {
  FiniteLattice lattice;
  std::vector<Element> members;
};
PrincipalIdeal MakePrincipalIdeal(const FiniteLattice& lattice, Element a);

// Injective meet/join preserving map from a pattern into a host lattice.
struct LatticeEmbedding {
  std::vector<Element> map;  // pattern element -> host element
};

bool IsEmbedding(const FiniteLattice& pattern, const FiniteLattice& host,
                 const std::vector<Element>& map);

// Exhaustive backtracking search. Pattern elements are placed in order of
// decreasing cover-graph degree (ties by index); host candidates are tried in
// index order, so the returned embedding is the first in that fixed order.
std::optional<LatticeEmbedding> FindSublatticeCopy(
    const FiniteLattice& host, const FiniteLattice& pattern,
    const Budgets& budgets = {});

// A lattice isomorphism first -> second, if one exists.
std::optional<LatticeEmbedding> FindIsomorphism(const FiniteLattice& first,
                                                const FiniteLattice& second,
                                                const Budgets& budgets = {});

struct DistributivityVerdict {
  bool distributive = true;
  std::string pattern;  // "m3" or "pentagon" when not distributive
  std::optional<LatticeEmbedding> witness;
};

// Forbidden-sublattice test: searches for M3 first, then N5.
DistributivityVerdict IsDistributive(const FiniteLattice& lattice,
                                     const Budgets& budgets = {});

// Direct check of x ^ (y v z) = (x ^ y) v (x ^ z) over all triples; returns
// the first failing triple.
std::optional<std::vector<Element>> DistributiveLawViolation(
    const FiniteLattice& lattice);

struct BirkhoffVerdict {
  bool distributive = false;
  std::vector<Element> join_irreducibles;
  std::size_t down_set_count = 0;
  // When distributive: element x -> bitmask of join-irreducibles below x, an
  // isomorphism onto the lattice of down-sets.
  std::vector<std::uint64_t> down_set_of;
};

// Reconstructs L from the poset of its join-irreducibles and compares.
BirkhoffVerdict BirkhoffOracle(const FiniteLattice& lattice,
                               const Budgets& budgets = {});

}  // namespace latkit

#endif  // LATKIT_LATTICE_HPP_
