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

#include "latkit/representation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "latkit/error.hpp"

namespace latkit {

namespace {

bool SameLatticeOrder(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(x, y)) return false;
    }
  }
  return true;
}

// True iff the labelings first(i) and second(i), i in `positions`, induce
// the same partition.
template <typename F, typename G>
bool SamePartitionOn(std::span<const std::size_t> positions, F first, G second) {
  std::map<std::uint32_t, std::uint32_t> forward, backward;
  for (std::size_t i : positions) {
    const std::uint32_t a = first(i), b = second(i);
    auto [fit, fnew] = forward.try_emplace(a, b);
    if (!fnew && fit->second != b) return false;
    auto [bit, bnew] = backward.try_emplace(b, a);
    if (!bnew && bit->second != a) return false;
  }
  return true;
}

std::vector<std::size_t> MaskPoints(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Nonempty subsets of {0..k-1} as bitmasks: decreasing size, then
// lexicographic order of the sorted member lists.
const std::vector<std::uint64_t>& SubsetOrder(std::size_t k) {
  static std::map<std::size_t, std::vector<std::uint64_t>> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> out;
  std::vector<std::size_t> combo;
  for (std::size_t size = k; size >= 1; --size) {
    combo.resize(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (auto c : combo) mask |= std::uint64_t{1} << c;
      out.push_back(mask);
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return cache.emplace(k, std::move(out)).first->second;
}

class CppSolver {
 public:
  explicit CppSolver(const Representation& rep) : rep_(rep) {}

  std::shared_ptr<const CppCertificate> Node(std::uint64_t mask,
                                             std::size_t depth) {
    auto key = std::make_pair(depth, mask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto node = std::make_shared<CppCertificate>();
    node->depth = depth;
    node->points = MaskPoints(mask);
    if (depth == 0) {
      node->holds = true;
      for (Element r = 0; r < rep_.lattice.size(); ++r) {
        if (ClassCount(r, node->points) == 2) {
          node->holds = false;
          node->two_class_element = r;
          break;
        }
      }
    } else {
      Solve(*node, depth);
    }
    memo_.emplace(key, node);
    return node;
  }

 private:
  std::size_t ClassCount(Element r, const std::vector<std::size_t>& points) const {
    std::set<std::uint32_t> ids;
    for (auto p : points) ids.insert(rep_.alpha[r].class_of(p));
    return ids.size();
  }

  bool Injective(std::uint64_t mask) {
    if (auto it = injective_.find(mask); it != injective_.end()) return it->second;
    const auto points = MaskPoints(mask);
    bool ok = true;
    const std::size_t n = rep_.lattice.size();
    for (Element r = 0; r < n && ok; ++r) {
      for (Element s = r + 1; s < n && ok; ++s) {
        if (SamePartitionOn(
                points, [&](std::size_t p) { return rep_.alpha[r].class_of(p); },
                [&](std::size_t p) { return rep_.alpha[s].class_of(p); })) {
          ok = false;
        }
      }
    }
    injective_.emplace(mask, ok);
    return ok;
  }

  void Solve(CppCertificate& node, std::size_t depth) {
    const auto& points = node.points;
    const std::size_t k = points.size();
    node.holds = true;
    ForEachPartition(k, [&](const EquivalenceRelation& theta) {
      for (std::uint64_t rel : SubsetOrder(k)) {
        std::vector<std::size_t> positions = MaskPoints(rel);
        std::optional<Element> canon;
        for (Element r = 0; r < rep_.lattice.size() && !canon; ++r) {
          if (SamePartitionOn(
                  positions, [&](std::size_t i) { return theta.class_of(i); },
                  [&](std::size_t i) {
                    return rep_.alpha[r].class_of(points[i]);
                  })) {
            canon = r;
          }
        }
        if (!canon) continue;
        std::uint64_t absolute = 0;
        std::vector<std::size_t> subset;
        for (auto i : positions) {
          absolute |= std::uint64_t{1} << points[i];
          subset.push_back(points[i]);
        }
        if (!Injective(absolute)) continue;
        auto child = Node(absolute, depth - 1);
        if (!child->holds) continue;
        node.choices.push_back({theta, std::move(subset), *canon, child});
        return true;
      }
      node.holds = false;
      node.failing_theta = theta;
      node.choices.clear();
      return false;
    });
  }

  const Representation& rep_;
  std::map<std::pair<std::size_t, std::uint64_t>,
           std::shared_ptr<const CppCertificate>> memo_;
  std::map<std::uint64_t, bool> injective_;
};

}  // namespace

Representation MakeRepresentation(FiniteLattice lattice, std::size_t ground_size,
                                  std::vector<EquivalenceRelation> alpha,
                                  std::vector<std::string> decode) {
  if (alpha.size() != lattice.size()) {
    Fail(ErrorCode::kInvalidParameter,
         "representation needs one relation per lattice element (" +
             std::to_string(lattice.size()) + "), got " +
             std::to_string(alpha.size()));
  }
  for (const auto& a : alpha) {
    if (a.ground_size() != ground_size) {
      Fail(ErrorCode::kGroundMismatch,
           "relation on " + std::to_string(a.ground_size()) +
               " points in a representation over " + std::to_string(ground_size));
    }
  }
  if (!decode.empty() && decode.size() != ground_size) {
    Fail(ErrorCode::kInvalidParameter, "decode must name every ground point");
  }
  return Representation{std::move(lattice), ground_size, std::move(alpha),
                        std::move(decode)};
}

PseudoRepReport VerifyPseudoRep(const Representation& rep) {
  PseudoRepReport report;
  const auto& l = rep.lattice;
  if (!rep.image(l.bottom()).is_trivial()) {
    report.violations.push_back({"bottom_not_trivial", std::nullopt});
  }
  if (!rep.image(l.top()).is_discrete()) {
    report.violations.push_back({"top_not_discrete", std::nullopt});
  }
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = x; y < l.size(); ++y) {
      if (rep.image(l.join(x, y)) != MeetEq(rep.image(x), rep.image(y))) {
        report.violations.push_back({"join_not_meet", ElementPair{x, y}});
      }
    }
  }
  return report;
}

InjectivityVerdict IsRepresentation(const Representation& rep) {
  for (Element x = 0; x < rep.lattice.size(); ++x) {
    for (Element y = x + 1; y < rep.lattice.size(); ++y) {
      if (rep.image(x) == rep.image(y)) return {false, ElementPair{x, y}};
    }
  }
  return {};
}

RestrictedRep RestrictRep(const Representation& rep,
                          std::span<const std::size_t> subset) {
  if (subset.empty()) Fail(ErrorCode::kEmptySubset, "restriction to empty set");
  RestrictedRep out;
  out.points.assign(subset.begin(), subset.end());
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  std::vector<EquivalenceRelation> alpha;
  for (const auto& a : rep.alpha) alpha.push_back(RestrictEq(a, out.points));
  std::vector<std::string> decode;
  if (!rep.decode.empty()) {
    for (auto p : out.points) decode.push_back(rep.decode[p]);
  }
  out.rep = MakeRepresentation(rep.lattice, out.points.size(), std::move(alpha),
                               std::move(decode));
  out.is_representation = IsRepresentation(out.rep).injective;
  return out;
}

Representation RelabelRep(const Representation& rep,
                          std::span<const std::size_t> perm) {
  const std::size_t n = rep.ground_size;
  if (perm.size() != n) {
    Fail(ErrorCode::kInvalidParameter, "permutation size differs from ground");
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (auto p : perm) {
    if (p >= n || seen[p]) Fail(ErrorCode::kInvalidParameter, "not a permutation");
    seen[p] = 1;
  }
  std::vector<EquivalenceRelation> alpha;
  for (const auto& a : rep.alpha) {
    std::vector<std::uint32_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) labels[perm[x]] = a.class_of(x);
    alpha.push_back(EquivalenceRelation::FromLabels(labels));
  }
  std::vector<std::string> decode;
  if (!rep.decode.empty()) {
    decode.resize(n);
    for (std::size_t x = 0; x < n; ++x) decode[perm[x]] = rep.decode[x];
  }
  return MakeRepresentation(rep.lattice, n, std::move(alpha), std::move(decode));
}

std::optional<std::vector<std::size_t>> RepsIsomorphic(
    const Representation& first, const Representation& second,
    const Budgets& budgets) {
  if (!SameLatticeOrder(first.lattice, second.lattice)) {
    Fail(ErrorCode::kInvalidParameter,
         "isomorphism test needs representations of the same lattice");
  }
  const std::size_t n = first.ground_size;
  if (n != second.ground_size) return std::nullopt;
  if (n > budgets.iso_ground) FailBudget("iso_ground", n, budgets.iso_ground);
  const std::size_t elements = first.lattice.size();
  for (Element r = 0; r < elements; ++r) {
    if (ComputeEqStats(first.image(r)).class_sizes !=
        ComputeEqStats(second.image(r)).class_sizes) {
      return std::nullopt;
    }
  }
  auto signature = [&](const Representation& rep, std::size_t p) {
    std::vector<std::size_t> sig;
    for (Element r = 0; r < elements; ++r) {
      const auto& a = rep.image(r);
      sig.push_back(static_cast<std::size_t>(
          std::count(a.class_ids().begin(), a.class_ids().end(), a.class_of(p))));
    }
    return sig;
  };
  std::vector<std::vector<std::size_t>> sig1(n), sig2(n);
  for (std::size_t p = 0; p < n; ++p) {
    sig1[p] = signature(first, p);
    sig2[p] = signature(second, p);
  }
  std::vector<std::size_t> f(n, SIZE_MAX);
  std::vector<std::uint8_t> used(n, 0);
  auto place = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || sig1[x] != sig2[y]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < x && ok; ++w) {
        for (Element r = 0; r < elements && ok; ++r) {
          ok = first.image(r).related(x, w) == second.image(r).related(y, f[w]);
        }
      }
      if (!ok) continue;
      f[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return f;
}

std::optional<Element> CanonicalFor(const EquivalenceRelation& theta,
                                    const Representation& rep) {
  if (theta.ground_size() != rep.ground_size) {
    Fail(ErrorCode::kGroundMismatch,
         "relation ground " + std::to_string(theta.ground_size()) +
             " differs from representation ground " +
             std::to_string(rep.ground_size));
  }
  for (Element r = 0; r < rep.lattice.size(); ++r) {
    if (rep.image(r) == theta) return r;
  }
  return std::nullopt;
}

ZeroCppVerdict IsZeroCpp(const Representation& rep) {
  for (Element r = 0; r < rep.lattice.size(); ++r) {
    if (rep.image(r).num_classes() == 2) return {false, r};
  }
  return {};
}

std::shared_ptr<const CppCertificate> IsNCpp(const Representation& rep,
                                             std::size_t depth,
                                             const Budgets& budgets) {
  const std::size_t limit = std::min<std::size_t>(budgets.cpp_ground, 63);
  if (rep.ground_size > limit) FailBudget("cpp_ground", rep.ground_size, limit);
  if (rep.ground_size == 0) {
    Fail(ErrorCode::kInvalidParameter, "CPP check needs a nonempty ground");
  }
  const std::uint64_t all = (std::uint64_t{1} << rep.ground_size) - 1;
  return CppSolver(rep).Node(all, depth);
}

Representation PairsB2Rep(std::size_t n) {
  if (n < 2) Fail(ErrorCode::kInvalidParameter, "pairs representation needs n >= 2");
  std::vector<std::uint32_t> first, second;
  std::vector<std::string> decode;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      first.push_back(x);
      second.push_back(y);
      decode.push_back("<" + std::to_string(x) + "," + std::to_string(y) + ">");
    }
  }
  const std::size_t g = first.size();
  std::vector<EquivalenceRelation> alpha{
      EquivalenceRelation::Trivial(g), EquivalenceRelation::FromLabels(first),
      EquivalenceRelation::FromLabels(second), EquivalenceRelation::Discrete(g)};
  return MakeRepresentation(BooleanLattice(2), g, std::move(alpha),
                            std::move(decode));
}

Representation M3BaseRep() {
  auto from = [](std::vector<std::uint32_t> labels) {
    return EquivalenceRelation::FromLabels(labels);
  };
  std::vector<EquivalenceRelation> alpha{
      EquivalenceRelation::Trivial(3), from({0, 1, 1}), from({0, 1, 0}),
      from({0, 0, 1}), EquivalenceRelation::Discrete(3)};
  return MakeRepresentation(MLattice(3), 3, std::move(alpha), {"0", "1", "2"});
}

Representation PowerRep(const Representation& rep, std::size_t m,
                        const Budgets& budgets) {
  if (m == 0) Fail(ErrorCode::kInvalidParameter, "power_rep needs m >= 1");
  const std::size_t g = rep.ground_size;
  std::size_t size = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (g != 0 && size > budgets.power_ground / g) {
      FailBudget("power_ground", SIZE_MAX, budgets.power_ground);
    }
    size *= g;
  }
  if (size > budgets.power_ground) {
    FailBudget("power_ground", size, budgets.power_ground);
  }
  std::vector<std::vector<std::size_t>> digits(size, std::vector<std::size_t>(m));
  for (std::size_t s = 0; s < size; ++s) {
    std::size_t v = s;
    for (std::size_t i = m; i-- > 0;) {
      digits[s][i] = v % g;
      v /= g;
    }
  }
  std::vector<EquivalenceRelation> alpha;
  for (const auto& a : rep.alpha) {
    std::vector<std::uint64_t> key(size);
    for (std::size_t s = 0; s < size; ++s) {
      std::uint64_t k = 0;
      for (std::size_t i = 0; i < m; ++i) {
        k = k * a.num_classes() + a.class_of(digits[s][i]);
      }
      key[s] = k;
    }
    alpha.push_back(KernelOf(key));
  }
  std::vector<std::string> decode(size);
  for (std::size_t s = 0; s < size; ++s) {
    std::string d = "(";
    for (std::size_t i = 0; i < m; ++i) {
      if (i) d += ",";
      d += rep.decode.empty() ? std::to_string(digits[s][i])
                              : rep.decode[digits[s][i]];
    }
    decode[s] = d + ")";
  }
  return MakeRepresentation(rep.lattice, size, std::move(alpha), std::move(decode));
}

ThresholdRankContext::ThresholdRankContext(std::size_t bound) : bound_(bound) {
  if (bound == 0) {
    Fail(ErrorCode::kInvalidParameter, "threshold bound must be at least 1");
  }
}

std::size_t MaxSplit(const EquivalenceRelation& coarse,
                     const EquivalenceRelation& fine) {
  if (coarse.ground_size() != fine.ground_size()) {
    Fail(ErrorCode::kGroundMismatch, "max_split: ground sizes differ");
  }
  std::vector<std::set<std::uint32_t>> inside(coarse.num_classes());
  for (std::size_t p = 0; p < coarse.ground_size(); ++p) {
    inside[coarse.class_of(p)].insert(fine.class_of(p));
  }
  std::size_t best = 0;
  for (const auto& s : inside) best = std::max(best, s.size());
  return best;
}

RankedRepVerdict CheckRankedRep(const Representation& rep,
                                std::span<const Element> rho,
                                const ThresholdRankContext& ctx) {
  const auto& l = rep.lattice;
  auto axioms = VerifyRankAxioms(l, rho);
  if (!axioms.valid()) {
    Fail(ErrorCode::kInvalidParameter,
         "rank map violates axiom (" +
             std::to_string(axioms.violations.front().axiom) + ")");
  }
  RankedRepVerdict v;
  for (Element r = 0; r < l.size(); ++r) {
    for (Element s = 0; s < l.size(); ++s) {
      if (!l.leq(r, s)) continue;
      const std::size_t split = MaxSplit(rep.image(r), rep.image(s));
      const bool bounded = split <= ctx.bound();
      const bool expected = l.leq(s, rho[r]);
      if (bounded != expected) {
        v.holds = false;
        v.violation = ElementPair{r, s};
        v.rank_says_bounded = expected;
        v.max_split = split;
        return v;
      }
    }
  }
  return v;
}

FamilyClosureVerdict FamilyClosureCheck(const std::vector<Representation>& family,
                                        const Budgets& budgets) {
  FamilyClosureVerdict v;
  if (family.empty()) {
    Fail(ErrorCode::kInvalidParameter, "family must be nonempty");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& rep = family[i];
    if (!SameLatticeOrder(rep.lattice, family.front().lattice)) {
      Fail(ErrorCode::kInvalidParameter,
           "family members must represent the same lattice");
    }
    if (rep.ground_size > budgets.cpp_ground) {
      FailBudget("cpp_ground", rep.ground_size, budgets.cpp_ground);
    }
    std::string reason;
    if (!VerifyPseudoRep(rep).valid()) {
      reason = "member is not a pseudo-representation";
    } else if (!IsRepresentation(rep).injective) {
      reason = "member is not injective";
    } else if (!IsZeroCpp(rep).holds) {
      reason = "member is not 0-CPP";
    }
    if (!reason.empty()) {
      v.holds = false;
      v.failing_member = i;
      v.reason = reason;
      v.witnesses.clear();
      return v;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& rep = family[i];
    const std::size_t k = rep.ground_size;
    bool member_ok = true;
    ForEachPartition(k, [&](const EquivalenceRelation& theta) {
      for (std::uint64_t mask : SubsetOrder(k)) {
        const auto subset = MaskPoints(mask);
        std::optional<Element> canon;
        for (Element r = 0; r < rep.lattice.size() && !canon; ++r) {
          if (SamePartitionOn(
                  subset, [&](std::size_t p) { return theta.class_of(p); },
                  [&](std::size_t p) { return rep.image(r).class_of(p); })) {
            canon = r;
          }
        }
        if (!canon) continue;
        auto restricted = RestrictRep(rep, subset);
        for (std::size_t j = 0; j < family.size(); ++j) {
          if (family[j].ground_size != subset.size()) continue;
          if (RepsIsomorphic(restricted.rep, family[j], budgets)) {
            v.witnesses.push_back({i, theta, subset, j, *canon});
            return true;
          }
        }
      }
      member_ok = false;
      v.failing_theta = theta;
      return false;
    });
    if (!member_ok) {
      v.holds = false;
      v.failing_member = i;
      v.reason = "no subset makes theta canonical within the family";
      v.witnesses.clear();
      return v;
    }
  }
  return v;
}

}  // namespace latkit
