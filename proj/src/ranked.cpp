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

#include "latkit/ranked.hpp"

#include <algorithm>
#include <sstream>

#include "latkit/error.hpp"

namespace latkit {

RankAxiomReport VerifyRankAxioms(const FiniteLattice& l,
                                 std::span<const Element> rho) {
  const std::size_t n = l.size();
  if (rho.size() != n) {
    Fail(ErrorCode::kInvalidParameter,
         "rank map has " + std::to_string(rho.size()) + " entries, lattice has " +
             std::to_string(n));
  }
  for (Element v : rho) {
    if (v >= n) {
      Fail(ErrorCode::kInvalidParameter,
           "rank value " + std::to_string(v) + " outside the lattice");
    }
  }
  RankAxiomReport report;
  auto& out = report.violations;
  for (Element x = 0; x < n; ++x) {
    if (!l.leq(x, rho[x])) out.push_back({1, {x}});
  }
  for (Element x = 0; x < n; ++x) {
    if (rho[rho[x]] != rho[x]) out.push_back({2, {x}});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!l.comparable(rho[x], rho[y])) out.push_back({3, {x, y}});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (rho[l.join(x, y)] != l.join(rho[x], rho[y])) {
        out.push_back({4, {x, y}});
      }
    }
  }
  return report;
}

RankedLattice RankedLattice::Make(std::shared_ptr<const FiniteLattice> lattice,
                                  RankMap rho) {
  auto report = VerifyRankAxioms(*lattice, rho);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    std::ostringstream os;
    os << "rank axiom (" << v.axiom << ") fails at";
    for (Element w : v.witnesses) os << " " << lattice->label(w);
    Fail(ErrorCode::kInvalidParameter, os.str());
  }
  return RankedLattice(std::move(lattice), std::move(rho));
}

RankedLattice RankedLattice::Make(const FiniteLattice& lattice, RankMap rho) {
  return Make(std::make_shared<const FiniteLattice>(lattice), std::move(rho));
}

std::vector<Element> RankedLattice::rankset() const {
  std::vector<Element> out(rho_.begin(), rho_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  const auto& l = *lattice_;
  std::sort(out.begin(), out.end(),
            [&](Element a, Element b) { return l.lt(a, b); });
  return out;
}

BlassVerdict CheckBlass(const RankedLattice& r) {
  const auto& l = r.lattice();
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      if (r.rank(x) == r.rank(y) && r.rank(l.meet(x, y)) != r.rank(x)) {
        return {false, ElementPair{x, y}};
      }
    }
  }
  return {};
}

GaifmanVerdict CheckGaifman(const RankedLattice& r) {
  const auto& l = r.lattice();
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      if (!l.lt(x, y)) continue;
      for (Element z = 0; z < l.size(); ++z) {
        if (r.rank(z) != z) continue;
        if (l.lt(y, l.join(x, z)) && l.meet(x, z) == l.meet(y, z)) {
          return {false, std::array<Element, 3>{x, y, z}};
        }
      }
    }
  }
  return {};
}

namespace {

constexpr Element kFree = ~Element{0};

class RankEnumerator {
 public:
  RankEnumerator(std::shared_ptr<const FiniteLattice> l, RankRequirements req)
      : shared_(std::move(l)), l_(*shared_), req_(req),
        rho_(l_.size(), kFree), pending_fix_(l_.size(), 0),
        join_sources_(l_.size()) {
    for (Element x = 0; x < l_.size(); ++x) {
      for (Element y = x; y < l_.size(); ++y) {
        join_sources_[l_.join(x, y)].emplace_back(x, y);
      }
    }
  }

  std::vector<RankedLattice> Run() {
    Extend(0);
    return std::move(out_);
  }

 private:
  bool Admissible(Element x, Element v) const {
    if (!l_.leq(x, v)) return false;
    if (pending_fix_[x] > 0 && v != x) return false;
    if (v < x && rho_[v] != v) return false;
    for (Element y = 0; y < x; ++y) {
      if (!l_.comparable(rho_[y], v)) return false;
    }
    auto value = [&](Element e) { return e == x ? v : rho_[e]; };
    for (Element y = 0; y <= x; ++y) {
      const Element j = l_.join(x, y);
      if (j > x) continue;
      if (value(j) != l_.join(v, value(y))) return false;
    }
    for (const auto& [a, b] : join_sources_[x]) {
      if (a >= x || b >= x) continue;
      if (v != l_.join(rho_[a], rho_[b])) return false;
    }
    return true;
  }

  void Extend(Element x) {
    if (x == l_.size()) {
      Emit();
      return;
    }
    for (Element v = 0; v < l_.size(); ++v) {
      if (!Admissible(x, v)) continue;
      rho_[x] = v;
      if (v > x) ++pending_fix_[v];
      Extend(x + 1);
      if (v > x) --pending_fix_[v];
      rho_[x] = kFree;
    }
  }

  void Emit() {
    if (!VerifyRankAxioms(l_, rho_).valid()) return;
    auto ranked = RankedLattice::Make(shared_, rho_);
    if (req_.blass && !CheckBlass(ranked).holds) return;
    if (req_.gaifman && !CheckGaifman(ranked).holds) return;
    out_.push_back(std::move(ranked));
  }

  std::shared_ptr<const FiniteLattice> shared_;
  const FiniteLattice& l_;
  RankRequirements req_;
  RankMap rho_;
  std::vector<int> pending_fix_;
  std::vector<std::vector<ElementPair>> join_sources_;
  std::vector<RankedLattice> out_;
};

}  // namespace

std::vector<RankedLattice> EnumerateRanks(const FiniteLattice& lattice,
                                          RankRequirements require,
                                          const Budgets& budgets) {
  if (lattice.size() > budgets.rank_elements) {
    FailBudget("rank_elements", lattice.size(), budgets.rank_elements);
  }
  return RankEnumerator(std::make_shared<const FiniteLattice>(lattice), require)
      .Run();
}

std::vector<std::string> RankFlags(const RankedLattice& ranked) {
  std::vector<std::string> flags;
  const auto& l = ranked.lattice();
  if (l.size() != 5) return flags;
  static const FiniteLattice pentagon = Pentagon();
  // Pentagon labels: 0, a, b, c, 1 at indices 0..4.
  auto iso = FindIsomorphism(pentagon, l);
  if (!iso) return flags;
  // The pentagon has no nontrivial automorphism, so the images of 0 and b
  // are well defined.
  const Element zero = iso->map[0], b = iso->map[2];
  if (ranked.rank(zero) == b) flags.emplace_back(kExternalPentagonFlag);
  return flags;
}

}  // namespace latkit
