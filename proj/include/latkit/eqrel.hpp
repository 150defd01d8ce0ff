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

#ifndef LATKIT_EQREL_HPP_
#define LATKIT_EQREL_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// A partition of {0..ground_size-1}, stored as a class id per point in
// canonical first-occurrence order: ids form 0..k-1 and point i's id is at
// most one more than the largest id among points before it. Two relations
// are equal iff their id vectors are equal.
class EquivalenceRelation {
 public:
  EquivalenceRelation() = default;

  static EquivalenceRelation Discrete(std::size_t ground_size);
  static EquivalenceRelation Trivial(std::size_t ground_size);
  // Any labeling; relabeled into canonical form.
  static EquivalenceRelation FromLabels(std::span<const std::uint32_t> labels);
  // Classes must cover every point exactly once.
  static EquivalenceRelation FromClasses(
      std::size_t ground_size,
      const std::vector<std::vector<std::size_t>>& classes);

  std::size_t ground_size() const { return ids_.size(); }
  std::size_t num_classes() const { return num_classes_; }
  const std::vector<std::uint32_t>& class_ids() const { return ids_; }
  std::uint32_t class_of(std::size_t point) const { return ids_[point]; }
  bool related(std::size_t x, std::size_t y) const { return ids_[x] == ids_[y]; }
  bool is_trivial() const { return num_classes_ <= 1; }
  bool is_discrete() const { return num_classes_ == ids_.size(); }

  std::vector<std::vector<std::size_t>> classes() const;
  // Inclusion as sets of pairs: every class of *this lies inside a class of
  // `other`.
  bool refines(const EquivalenceRelation& other) const;

  friend bool operator==(const EquivalenceRelation& a,
                         const EquivalenceRelation& b) {
    return a.ids_ == b.ids_;
  }
  friend bool operator<(const EquivalenceRelation& a,
                        const EquivalenceRelation& b) {
    return a.ids_ < b.ids_;
  }

 private:
  std::vector<std::uint32_t> ids_;
  std::uint32_t num_classes_ = 0;
};

// Points are equivalent iff they carry equal values.
template <typename T>
EquivalenceRelation KernelOf(std::span<const T> values) {
  std::map<T, std::uint32_t> seen;
  std::vector<std::uint32_t> labels;
  labels.reserve(values.size());
  for (const T& v : values) {
    auto it = seen.try_emplace(v, static_cast<std::uint32_t>(seen.size())).first;
    labels.push_back(it->second);
  }
  return EquivalenceRelation::FromLabels(labels);
}

template <typename T>
EquivalenceRelation KernelOf(const std::vector<T>& values) {
  return KernelOf(std::span<const T>(values));
}

// Common refinement. Throws GroundMismatch on differing ground sizes.
EquivalenceRelation MeetEq(const EquivalenceRelation& a,
                           const EquivalenceRelation& b);
// Transitive closure of the union.
EquivalenceRelation JoinEq(const EquivalenceRelation& a,
                           const EquivalenceRelation& b);
// Induced relation on `subset`, reindexed by increasing point. Throws
// EmptySubset / InvalidParameter.
EquivalenceRelation RestrictEq(const EquivalenceRelation& t,
                               std::span<const std::size_t> subset);

struct EqStats {
  std::size_t num_classes = 0;
  bool is_trivial = false;
  bool is_discrete = false;
  std::vector<std::size_t> class_sizes;  // descending
};
EqStats ComputeEqStats(const EquivalenceRelation& t);

// Classes joined by '|', e.g. "02|1|3"; points are comma-separated once the
// ground exceeds 10.
std::string EqText(const EquivalenceRelation& t);

std::uint64_t BellNumber(std::size_t n);

// Visits every partition of an n-set once, in lexicographic order of the
// canonical class-id vector. Return false from the visitor to stop early.
void ForEachPartition(std::size_t n,
                      const std::function<bool(const EquivalenceRelation&)>& visit);
std::vector<EquivalenceRelation> AllPartitions(std::size_t n);

// Eq(A) as an explicit lattice (inclusion order, discrete relation at the
// bottom). Only for ground sizes up to 5.
struct EqLattice {
  FiniteLattice lattice;
  std::vector<EquivalenceRelation> members;
};
EqLattice MakeEqLattice(std::size_t ground_size);

// Union-find over 0..n-1 with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  // Returns true when two distinct sets were merged.
  bool unite(std::size_t x, std::size_t y);
  EquivalenceRelation ToRelation();

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace latkit

#endif  // LATKIT_EQREL_HPP_
