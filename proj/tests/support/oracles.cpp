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

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace latkit::testing {

namespace {

PairSet PairsOn(const std::vector<std::size_t>& subset,
                const std::function<bool(std::size_t, std::size_t)>& related) {
  PairSet out;
  for (auto x : subset) {
    for (auto y : subset) {
      if (related(x, y)) out.emplace(x, y);
    }
  }
  return out;
}

PairSet AlphaOn(const Representation& rep, Element r,
                const std::vector<std::size_t>& subset) {
  return PairsOn(subset, [&](std::size_t x, std::size_t y) {
    return rep.image(r).related(x, y);
  });
}

class NaiveCpp {
 public:
  explicit NaiveCpp(const Representation& rep) : rep_(rep) {}

  bool Holds(const std::vector<std::size_t>& y, std::size_t depth) {
    auto key = std::make_pair(depth, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result;
    if (depth == 0) {
      result = true;
      for (Element r = 0; r < rep_.lattice.size() && result; ++r) {
        std::set<std::uint32_t> classes;
        for (auto p : y) classes.insert(rep_.image(r).class_of(p));
        result = classes.size() != 2;
      }
    } else {
      result = true;
      for (const auto& blocks : BlockPartitions(y)) {
        std::map<std::size_t, std::size_t> block_of;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          for (auto p : blocks[b]) block_of[p] = b;
        }
        bool found = false;
        const std::size_t k = y.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k) && !found; ++mask) {
          std::vector<std::size_t> z;
          for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) z.push_back(y[i]);
          }
          const PairSet theta = PairsOn(z, [&](std::size_t a, std::size_t b) {
            return block_of[a] == block_of[b];
          });
          bool canonical = false;
          for (Element r = 0; r < rep_.lattice.size() && !canonical; ++r) {
            canonical = AlphaOn(rep_, r, z) == theta;
          }
          found = canonical && Injective(z) && Holds(z, depth - 1);
        }
        if (!found) {
          result = false;
          break;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool Injective(const std::vector<std::size_t>& z) {
    if (auto it = injective_.find(z); it != injective_.end()) return it->second;
    std::set<PairSet> images;
    for (Element r = 0; r < rep_.lattice.size(); ++r) images.insert(AlphaOn(rep_, r, z));
    const bool ok = images.size() == rep_.lattice.size();
    injective_.emplace(z, ok);
    return ok;
  }

  const Representation& rep_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, bool> memo_;
  std::map<std::vector<std::size_t>, bool> injective_;
};

}  // namespace

std::vector<std::vector<std::vector<std::size_t>>> BlockPartitions(
    const std::vector<std::size_t>& points) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> cur;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == points.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(points[i]);
      place(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({points[i]});
    place(i + 1);
    cur.pop_back();
  };
  place(0);
  return out;
}

bool NaiveNCpp(const Representation& rep, std::size_t depth) {
  std::vector<std::size_t> all(rep.ground_size);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return NaiveCpp(rep).Holds(all, depth);
}

std::vector<Representation> EnumerateReps(const FiniteLattice& lattice,
                                          std::size_t ground) {
  const std::size_t n = lattice.size();
  // A relation is the bitmask of its related pairs x < y.
  using Mask = std::uint32_t;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < ground; ++x)
    for (std::size_t y = x + 1; y < ground; ++y) pairs.emplace_back(x, y);
  auto bit_of = [&](std::size_t x, std::size_t y) {
    if (x > y) std::swap(x, y);
    return static_cast<std::size_t>(
        std::find(pairs.begin(), pairs.end(), std::make_pair(x, y)) - pairs.begin());
  };

  std::vector<Mask> parts;
  std::vector<std::vector<std::uint32_t>> part_ids;
  {
    std::vector<std::size_t> pts(ground);
    std::iota(pts.begin(), pts.end(), std::size_t{0});
    for (const auto& blocks : BlockPartitions(pts)) {
      std::vector<std::uint32_t> ids(ground);
      Mask m = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (auto p : blocks[b]) ids[p] = static_cast<std::uint32_t>(b);
        for (auto p : blocks[b])
          for (auto q : blocks[b])
            if (p < q) m |= Mask{1} << bit_of(p, q);
      }
      parts.push_back(m);
      part_ids.push_back(ids);
    }
  }
  const Mask trivial = pairs.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << pairs.size()) - 1);
  const Mask discrete = 0;

  // pair permutation induced by each ground permutation
  std::vector<std::vector<std::size_t>> pair_perms;
  {
    std::vector<std::size_t> perm(ground);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<std::size_t> pp(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        pp[i] = bit_of(perm[pairs[i].first], perm[pairs[i].second]);
      }
      pair_perms.push_back(std::move(pp));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  auto apply = [&](const std::vector<std::size_t>& pp, Mask m) {
    Mask out = 0;
    for (std::size_t i = 0; i < pp.size(); ++i) {
      if (m >> i & 1) out |= Mask{1} << pp[i];
    }
    return out;
  };

  std::vector<std::size_t> alpha(n);  // index into parts
  std::vector<Mask> mask(n);
  std::vector<Representation> out;
  std::set<std::vector<Mask>> seen;

  std::function<void(Element)> assign = [&](Element x) {
    if (x == n) {
      if (seen.count(mask)) return;
      for (const auto& pp : pair_perms) {
        std::vector<Mask> image(n);
        for (Element r = 0; r < n; ++r) image[r] = apply(pp, mask[r]);
        seen.insert(std::move(image));
      }
      std::vector<EquivalenceRelation> images;
      for (Element r = 0; r < n; ++r) {
        images.push_back(EquivalenceRelation::FromLabels(part_ids[alpha[r]]));
      }
      out.push_back(MakeRepresentation(lattice, ground, std::move(images)));
      return;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Mask cand = parts[i];
      if (x == lattice.bottom() && cand != trivial) continue;
      if (x == lattice.top() && cand != discrete) continue;
      alpha[x] = i;
      mask[x] = cand;
      bool ok = true;
      for (Element y = 0; y < x && ok; ++y) ok = mask[y] != cand;
      for (Element y = 0; y <= x && ok; ++y) {
        for (Element z = 0; z <= x && ok; ++z) {
          const Element j = lattice.join(y, z);
          if (j <= x) ok = (mask[y] & mask[z]) == mask[j];
        }
      }
      if (ok) assign(x + 1);
    }
  };
  assign(0);
  return out;
}

std::vector<EquivalenceRelation> CongruencesByFilter(const FiniteAlgebra& algebra) {
  const std::size_t c = algebra.carrier_size();
  std::vector<std::size_t> pts(c);
  std::iota(pts.begin(), pts.end(), std::size_t{0});
  std::vector<EquivalenceRelation> out;
  for (const auto& blocks : BlockPartitions(pts)) {
    std::vector<std::uint32_t> ids(c);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (auto p : blocks[b]) ids[p] = static_cast<std::uint32_t>(b);
    }
    bool ok = true;
    for (const auto& op : algebra.ops()) {
      const std::size_t tuples = op.table.size();
      for (std::size_t s = 0; s < tuples && ok; ++s) {
        for (std::size_t t = 0; t < tuples && ok; ++t) {
          bool related = true;
          std::size_t a = s, b = t;
          for (std::size_t i = 0; i < op.arity; ++i) {
            related &= ids[a % c] == ids[b % c];
            a /= c;
            b /= c;
          }
          if (related) ok = ids[op.table[s]] == ids[op.table[t]];
        }
      }
    }
    if (ok) out.push_back(EquivalenceRelation::FromLabels(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RankMap> BruteForceRanks(const FiniteLattice& l, bool blass,
                                     bool gaifman) {
  const std::size_t n = l.size();
  std::vector<RankMap> out;
  RankMap rho(n, 0);
  while (true) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = l.leq(x, rho[x]) && rho[rho[x]] == rho[x];
    }
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        ok = l.comparable(rho[x], rho[y]) &&
             rho[l.join(x, y)] == l.join(rho[x], rho[y]);
        if (ok && blass && rho[x] == rho[y]) ok = rho[l.meet(x, y)] == rho[x];
      }
    }
    if (ok && gaifman) {
      for (Element x = 0; x < n && ok; ++x) {
        for (Element y = 0; y < n && ok; ++y) {
          for (Element z = 0; z < n && ok; ++z) {
            if (l.lt(x, y) && l.lt(y, l.join(x, z)) && rho[z] == z &&
                l.meet(x, z) == l.meet(y, z)) {
              ok = false;
            }
          }
        }
      }
    }
    if (ok) out.push_back(rho);
    std::size_t i = n;
    while (i > 0 && rho[i - 1] == n - 1) rho[--i] = 0;
    if (i == 0) break;
    ++rho[i - 1];
  }
  return out;
}

std::vector<FiniteAlgebra> AlgebraCorpus() {
  std::vector<FiniteAlgebra> out{CyclicGroup(2), CyclicGroup(3), CyclicGroup(4),
                                 CyclicGroup(5), KleinGroup(),
                                 FiniteAlgebra::Make(3, {}), FiniteAlgebra::Make(5, {})};
  std::mt19937 rng(3);
  for (std::size_t c = 1; c <= 5; ++c) {
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Operation> ops;
      const int count = trial % 3;
      for (int k = 0; k < count; ++k) {
        Operation op{static_cast<std::size_t>(1 + (trial + k) % 2), {}};
        std::size_t len = op.arity == 1 ? c : c * c;
        for (std::size_t i = 0; i < len; ++i) {
          op.table.push_back(static_cast<std::uint32_t>(rng() % c));
        }
        ops.push_back(op);
      }
      out.push_back(FiniteAlgebra::Make(c, ops));
    }
  }
  // a constant (nullary) operation and a ternary majority-like operation
  out.push_back(FiniteAlgebra::Make(3, {Operation{0, {1}}}));
  Operation maj{3, {}};
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c) maj.table.push_back(a == b ? a : c);
  out.push_back(FiniteAlgebra::Make(3, {maj}));
  return out;
}

}  // namespace latkit::testing
