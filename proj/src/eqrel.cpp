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

#include <algorithm>
#include <numeric>
#include <sstream>

#include "latkit/error.hpp"

namespace latkit {

EquivalenceRelation EquivalenceRelation::Discrete(std::size_t ground_size) {
  EquivalenceRelation r;
  r.ids_.resize(ground_size);
  std::iota(r.ids_.begin(), r.ids_.end(), 0U);
  r.num_classes_ = static_cast<std::uint32_t>(ground_size);
  return r;
}

EquivalenceRelation EquivalenceRelation::Trivial(std::size_t ground_size) {
  EquivalenceRelation r;
  r.ids_.assign(ground_size, 0);
  r.num_classes_ = ground_size == 0 ? 0 : 1;
  return r;
}

EquivalenceRelation EquivalenceRelation::FromLabels(
    std::span<const std::uint32_t> labels) {
  EquivalenceRelation r;
  r.ids_.reserve(labels.size());
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (std::uint32_t label : labels) {
    auto it = renumber.try_emplace(label, static_cast<std::uint32_t>(renumber.size()))
                  .first;
    r.ids_.push_back(it->second);
  }
  r.num_classes_ = static_cast<std::uint32_t>(renumber.size());
  return r;
}

EquivalenceRelation EquivalenceRelation::FromClasses(
    std::size_t ground_size,
    const std::vector<std::vector<std::size_t>>& classes) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> labels(ground_size, kNone);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      Fail(ErrorCode::kInvalidParameter, "equivalence class is empty");
    }
    for (std::size_t p : classes[c]) {
      if (p >= ground_size) {
        Fail(ErrorCode::kInvalidParameter,
             "point " + std::to_string(p) + " outside ground set of size " +
                 std::to_string(ground_size));
      }
      if (labels[p] != kNone) {
        Fail(ErrorCode::kInvalidParameter,
             "point " + std::to_string(p) + " appears in two classes");
      }
      labels[p] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::size_t p = 0; p < ground_size; ++p) {
    if (labels[p] == kNone) {
      Fail(ErrorCode::kInvalidParameter,
           "point " + std::to_string(p) + " is in no class");
    }
  }
  return FromLabels(labels);
}

std::vector<std::vector<std::size_t>> EquivalenceRelation::classes() const {
  std::vector<std::vector<std::size_t>> out(num_classes_);
  for (std::size_t p = 0; p < ids_.size(); ++p) out[ids_[p]].push_back(p);
  return out;
}

bool EquivalenceRelation::refines(const EquivalenceRelation& other) const {
  if (other.ground_size() != ground_size()) {
    Fail(ErrorCode::kGroundMismatch, "refines: ground sizes differ");
  }
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> image(num_classes_, kNone);
  for (std::size_t p = 0; p < ids_.size(); ++p) {
    auto& slot = image[ids_[p]];
    if (slot == kNone) {
      slot = other.ids_[p];
    } else if (slot != other.ids_[p]) {
      return false;
    }
  }
  return true;
}

namespace {

void RequireSameGround(const EquivalenceRelation& a,
                       const EquivalenceRelation& b, const char* op) {
  if (a.ground_size() != b.ground_size()) {
    std::ostringstream os;
    os << op << ": ground sizes differ (" << a.ground_size() << " vs "
       << b.ground_size() << ")";
    Fail(ErrorCode::kGroundMismatch, os.str());
  }
}

}  // namespace

EquivalenceRelation MeetEq(const EquivalenceRelation& a,
                           const EquivalenceRelation& b) {
  RequireSameGround(a, b, "meet_eq");
  std::vector<std::uint32_t> labels(a.ground_size());
  const std::uint32_t width = static_cast<std::uint32_t>(b.num_classes());
  for (std::size_t p = 0; p < labels.size(); ++p) {
    labels[p] = a.class_of(p) * width + b.class_of(p);
  }
  return EquivalenceRelation::FromLabels(labels);
}

EquivalenceRelation JoinEq(const EquivalenceRelation& a,
                           const EquivalenceRelation& b) {
  RequireSameGround(a, b, "join_eq");
  DisjointSets sets(a.ground_size());
  std::vector<std::size_t> first_a(a.num_classes(), SIZE_MAX);
  std::vector<std::size_t> first_b(b.num_classes(), SIZE_MAX);
  for (std::size_t p = 0; p < a.ground_size(); ++p) {
    auto& fa = first_a[a.class_of(p)];
    if (fa == SIZE_MAX) fa = p; else sets.unite(fa, p);
    auto& fb = first_b[b.class_of(p)];
    if (fb == SIZE_MAX) fb = p; else sets.unite(fb, p);
  }
  return sets.ToRelation();
}

EquivalenceRelation RestrictEq(const EquivalenceRelation& t,
                               std::span<const std::size_t> subset) {
  if (subset.empty()) Fail(ErrorCode::kEmptySubset, "restriction to empty set");
  std::vector<std::size_t> points(subset.begin(), subset.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.back() >= t.ground_size()) {
    Fail(ErrorCode::kInvalidParameter,
         "subset point " + std::to_string(points.back()) +
             " outside ground set");
  }
  std::vector<std::uint32_t> labels;
  labels.reserve(points.size());
  for (std::size_t p : points) labels.push_back(t.class_of(p));
  return EquivalenceRelation::FromLabels(labels);
}

EqStats ComputeEqStats(const EquivalenceRelation& t) {
  EqStats s;
  s.num_classes = t.num_classes();
  s.is_trivial = t.is_trivial();
  s.is_discrete = t.is_discrete();
  s.class_sizes.assign(t.num_classes(), 0);
  for (auto id : t.class_ids()) ++s.class_sizes[id];
  std::sort(s.class_sizes.rbegin(), s.class_sizes.rend());
  return s;
}

std::uint64_t BellNumber(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

void ForEachPartition(
    std::size_t n, const std::function<bool(const EquivalenceRelation&)>& visit) {
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1.
  std::vector<std::uint32_t> rgs(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);  // max(rgs[0..i])
  while (true) {
    if (!visit(EquivalenceRelation::FromLabels(rgs))) return;
    std::size_t i = n;
    while (i > 1 && rgs[i - 1] > prefix_max[i - 2]) --i;
    if (i <= 1) return;
    --i;  // rightmost position that can still grow
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::string EqText(const EquivalenceRelation& t) {
  const bool wide = t.ground_size() > 10;
  std::string s;
  for (const auto& c : t.classes()) {
    if (!s.empty()) s += "|";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (wide && i) s += ",";
      s += std::to_string(c[i]);
    }
  }
  return s;
}

std::vector<EquivalenceRelation> AllPartitions(std::size_t n) {
  std::vector<EquivalenceRelation> out;
  ForEachPartition(n, [&](const EquivalenceRelation& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

EqLattice MakeEqLattice(std::size_t ground_size) {
  if (ground_size == 0) {
    Fail(ErrorCode::kInvalidParameter, "Eq(A) needs a nonempty ground set");
  }
  if (ground_size > 5) FailBudget("eq_lattice_ground", ground_size, 5);
  auto members = AllPartitions(ground_size);
  std::stable_sort(members.begin(), members.end(),
                   [](const EquivalenceRelation& a, const EquivalenceRelation& b) {
                     return a.num_classes() > b.num_classes();
                   });
  std::vector<ElementPair> pairs;
  std::vector<std::string> labels;
  for (Element i = 0; i < members.size(); ++i) {
    labels.push_back(EqText(members[i]));
    for (Element j = 0; j < members.size(); ++j) {
      if (i != j && members[i].refines(members[j])) pairs.emplace_back(i, j);
    }
  }
  return {BuildLattice(members.size(), pairs, std::move(labels)), members};
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  return true;
}

EquivalenceRelation DisjointSets::ToRelation() {
  std::vector<std::uint32_t> labels(parent_.size());
  for (std::size_t p = 0; p < parent_.size(); ++p) {
    labels[p] = static_cast<std::uint32_t>(find(p));
  }
  return EquivalenceRelation::FromLabels(labels);
}

}  // namespace latkit
