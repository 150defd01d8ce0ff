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

#ifndef LATKIT_REPRESENTATION_HPP_
#define LATKIT_REPRESENTATION_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latkit/eqrel.hpp"
#include "latkit/lattice.hpp"
#include "latkit/ranked.hpp"

namespace latkit {

// A map from lattice elements to equivalence relations on a shared ground
// set {0..ground_size-1}. `decode`, when present, names each ground point
// (for example "<0,3>" for a pair or "(2,0,1)" for a sequence).
struct Representation {
  FiniteLattice lattice = Chain(1);
  std::size_t ground_size = 0;
  std::vector<EquivalenceRelation> alpha;
  std::vector<std::string> decode;

  const EquivalenceRelation& image(Element r) const { return alpha[r]; }
  bool degenerate() const { return ground_size <= 1; }
};

// Checks sizes only (one relation per element, all on the same ground).
Representation MakeRepresentation(FiniteLattice lattice, std::size_t ground_size,
                                  std::vector<EquivalenceRelation> alpha,
                                  std::vector<std::string> decode = {});

struct PseudoRepViolation {
  // "bottom_not_trivial", "top_not_discrete" or "join_not_meet"
  std::string law;
  std::optional<ElementPair> pair;
};

struct PseudoRepReport {
  std::vector<PseudoRepViolation> violations;
  bool valid() const { return violations.empty(); }
};

// alpha(0) trivial, alpha(1) discrete, alpha(x v y) = alpha(x) ^ alpha(y).
PseudoRepReport VerifyPseudoRep(const Representation& rep);

struct InjectivityVerdict {
  bool injective = true;
  std::optional<ElementPair> witness;  // first x < y with equal images
};
InjectivityVerdict IsRepresentation(const Representation& rep);

struct RestrictedRep {
  Representation rep;
  std::vector<std::size_t> points;  // original index of each new point
  bool is_representation = false;
};
// Pointwise restriction alpha(r) ^ Y^2, reindexed by increasing point.
RestrictedRep RestrictRep(const Representation& rep,
                          std::span<const std::size_t> subset);

// The representation transported along a ground permutation: point x of
// `rep` becomes point perm[x].
Representation RelabelRep(const Representation& rep,
                          std::span<const std::size_t> perm);

// A ground bijection f with (x, y) in first(r) iff (f x, f y) in second(r)
// for every r. Throws InvalidParameter if the lattices differ.
std::optional<std::vector<std::size_t>> RepsIsomorphic(
    const Representation& first, const Representation& second,
    const Budgets& budgets = {});

// Least element r (by index) with theta = alpha(r).
std::optional<Element> CanonicalFor(const EquivalenceRelation& theta,
                                    const Representation& rep);

struct ZeroCppVerdict {
  bool holds = true;
  std::optional<Element> witness;  // an element whose image has two classes
};
ZeroCppVerdict IsZeroCpp(const Representation& rep);

// Proof object for IsNCpp. A node certifies (or refutes) depth-n CPP of the
// restriction of the root representation to `points`.
struct CppCertificate {
  struct Choice {
    EquivalenceRelation theta;          // on this node's points, reindexed
    std::vector<std::size_t> subset;    // Y, as original ground points
    Element canonical_element = 0;      // theta ^ Y^2 = alpha(r) ^ Y^2
    std::shared_ptr<const CppCertificate> child;  // depth - 1 on Y
  };

  std::size_t depth = 0;
  std::vector<std::size_t> points;
  bool holds = false;
  std::optional<Element> two_class_element;      // depth 0 refutation
  std::optional<EquivalenceRelation> failing_theta;  // depth > 0 refutation
  std::vector<Choice> choices;                   // one per theta when holding
};

// depth 0: IsZeroCpp. depth n+1: every theta in Eq(ground) has some nonempty
// Y such that the restriction to Y is an injective depth-n CPP
// representation and theta ^ Y^2 is canonical for it. Subsets are tried by
// decreasing size, then lexicographically. Throws SizeLimit past
// budgets.cpp_ground.
std::shared_ptr<const CppCertificate> IsNCpp(const Representation& rep,
                                             std::size_t depth,
                                             const Budgets& budgets = {});

// Representation of the four-element Boolean lattice on pairs <x,y>,
// x < y < n: alpha(a) is the kernel of the first coordinate, alpha(b) of the
// second. Requires n >= 2; n = 2 gives a single (degenerate) point.
Representation PairsB2Rep(std::size_t n);

// M3 on {0,1,2}: alpha(a) = {0|12}, alpha(b) = {02|1}, alpha(c) = {01|2}.
Representation M3BaseRep();

// Ground = length-m sequences over rep's ground (lexicographic index),
// s ~ t in alpha^m(r) iff s_i ~ t_i in alpha(r) for every i.
Representation PowerRep(const Representation& rep, std::size_t m,
                        const Budgets& budgets = {});

// "At most `bound` classes" stands in for an M-bounded family of classes.
class ThresholdRankContext {
 public:
  explicit ThresholdRankContext(std::size_t bound);
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

struct RankedRepVerdict {
  bool holds = true;
  std::optional<ElementPair> violation;  // (r, s) with r <= s
  bool rank_says_bounded = false;        // s <= rho(r) at the violation
  std::size_t max_split = 0;             // largest alpha(s)-count in an alpha(r)-class
};

// For all r <= s: s <= rho(r) iff every alpha(r)-class is a union of at most
// `bound` alpha(s)-classes. Throws InvalidParameter when rho fails the rank
// axioms.
RankedRepVerdict CheckRankedRep(const Representation& rep,
                                std::span<const Element> rho,
                                const ThresholdRankContext& ctx);

// Largest number of alpha(s)-classes inside one alpha(r)-class.
std::size_t MaxSplit(const EquivalenceRelation& coarse,
                     const EquivalenceRelation& fine);

struct FamilyClosureVerdict {
  struct Witness {
    std::size_t member = 0;
    EquivalenceRelation theta;
    std::vector<std::size_t> subset;
    std::size_t matched_member = 0;
    Element canonical_element = 0;
  };
  bool holds = true;
  std::optional<std::size_t> failing_member;
  std::optional<EquivalenceRelation> failing_theta;
  std::string reason;
  std::vector<Witness> witnesses;
};

// Finite check of the correctness property of a family: every member is a
// 0-CPP representation, and for every member alpha and every theta there is
// Y with alpha|Y isomorphic to a member and theta ^ Y^2 canonical for it.
FamilyClosureVerdict FamilyClosureCheck(const std::vector<Representation>& family,
                                        const Budgets& budgets = {});

}  // namespace latkit

#endif  // LATKIT_REPRESENTATION_HPP_
