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

#include "latkit/congruence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "latkit/error.hpp"

namespace latkit {

namespace {

std::size_t Power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

void Digits(std::size_t index, std::size_t base, std::vector<std::uint32_t>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % base);
    index /= base;
  }
}

std::size_t Encode(const std::vector<std::uint32_t>& digits, std::size_t base) {
  std::size_t out = 0;
  for (auto d : digits) out = out * base + d;
  return out;
}

FiniteLattice InclusionLattice(std::vector<EquivalenceRelation>& members) {
  std::sort(members.begin(), members.end(),
            [](const EquivalenceRelation& a, const EquivalenceRelation& b) {
              if (a.num_classes() != b.num_classes()) {
                return a.num_classes() > b.num_classes();
              }
              return a < b;
            });
  std::vector<ElementPair> pairs;
  std::vector<std::string> labels;
  for (Element i = 0; i < members.size(); ++i) {
    labels.push_back(EqText(members[i]));
    for (Element j = 0; j < members.size(); ++j) {
      if (i != j && members[i].refines(members[j])) pairs.emplace_back(i, j);
    }
  }
  return BuildLattice(members.size(), pairs, std::move(labels));
}

}  // namespace

FiniteAlgebra FiniteAlgebra::Make(std::size_t carrier_size,
                                  std::vector<Operation> ops) {
  if (carrier_size == 0) {
    Fail(ErrorCode::kInvalidParameter, "algebra carrier must be nonempty");
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::size_t expect = Power(carrier_size, ops[i].arity);
    if (ops[i].arity > 8 || ops[i].table.size() != expect) {
      Fail(ErrorCode::kInvalidParameter,
           "operation " + std::to_string(i) + " of arity " +
               std::to_string(ops[i].arity) + " needs a table of " +
               std::to_string(expect) + " entries");
    }
    for (auto v : ops[i].table) {
      if (v >= carrier_size) {
        Fail(ErrorCode::kInvalidParameter,
             "operation " + std::to_string(i) + " has entry " + std::to_string(v) +
                 " outside the carrier");
      }
    }
  }
  FiniteAlgebra a;
  a.carrier_ = carrier_size;
  a.ops_ = std::move(ops);
  return a;
}

FiniteAlgebra CyclicGroup(std::size_t n) {
  Operation add{2, {}};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      add.table.push_back(static_cast<std::uint32_t>((x + y) % n));
    }
  }
  return FiniteAlgebra::Make(n, {add});
}

FiniteAlgebra KleinGroup() {
  Operation add{2, {}};
  for (std::uint32_t x = 0; x < 4; ++x) {
    for (std::uint32_t y = 0; y < 4; ++y) add.table.push_back(x ^ y);
  }
  return FiniteAlgebra::Make(4, {add});
}

CongruenceVerdict IsCongruence(const EquivalenceRelation& theta,
                               const FiniteAlgebra& algebra) {
  const std::size_t c = algebra.carrier_size();
  if (theta.ground_size() != c) {
    Fail(ErrorCode::kGroundMismatch,
         "relation on " + std::to_string(theta.ground_size()) +
             " points, carrier has " + std::to_string(c));
  }
  for (std::size_t i = 0; i < algebra.ops().size(); ++i) {
    const auto& op = algebra.ops()[i];
    const std::size_t tuples = op.table.size();
    std::vector<std::uint32_t> a(op.arity), b(op.arity);
    for (std::size_t ta = 0; ta < tuples; ++ta) {
      Digits(ta, c, a);
      for (std::size_t tb = 0; tb < tuples; ++tb) {
        Digits(tb, c, b);
        bool related = true;
        for (std::size_t j = 0; j < op.arity && related; ++j) {
          related = theta.related(a[j], b[j]);
        }
        if (related && !theta.related(op.table[ta], op.table[tb])) {
          return {false, CongruenceVerdict::Witness{i, a, b}};
        }
      }
    }
  }
  return {};
}

EquivalenceRelation CongruenceGenerated(const FiniteAlgebra& algebra,
                                        const EquivalenceRelation& theta) {
  const std::size_t c = algebra.carrier_size();
  if (theta.ground_size() != c) {
    Fail(ErrorCode::kGroundMismatch, "relation is not on the carrier");
  }
  DisjointSets sets(c);
  for (std::size_t x = 0; x < c; ++x) {
    for (std::size_t y = x + 1; y < c; ++y) {
      if (theta.related(x, y)) sets.unite(x, y);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& op : algebra.ops()) {
      std::vector<std::uint32_t> args(op.arity);
      for (std::size_t t = 0; t < op.table.size(); ++t) {
        Digits(t, c, args);
        for (std::size_t j = 0; j < op.arity; ++j) {
          const std::uint32_t keep = args[j];
          for (std::uint32_t y = 0; y < c; ++y) {
            if (y == keep || sets.find(y) != sets.find(keep)) continue;
            args[j] = y;
            changed |= sets.unite(op.table[t], op.table[Encode(args, c)]);
          }
          args[j] = keep;
        }
      }
    }
  }
  return sets.ToRelation();
}

EquivalenceRelation PrincipalCongruence(const FiniteAlgebra& algebra,
                                        std::size_t a, std::size_t b) {
  const std::size_t c = algebra.carrier_size();
  if (a >= c || b >= c) {
    Fail(ErrorCode::kInvalidParameter, "principal congruence of a non-element");
  }
  DisjointSets seed(c);
  seed.unite(a, b);
  return CongruenceGenerated(algebra, seed.ToRelation());
}

CongruenceLattice ComputeCongruenceLattice(const FiniteAlgebra& algebra,
                                           const Budgets& budgets) {
  const std::size_t c = algebra.carrier_size();
  if (c > budgets.carrier) FailBudget("carrier", c, budgets.carrier);
  CongruenceLattice out;
  std::set<EquivalenceRelation> seen;
  std::vector<EquivalenceRelation> list;
  auto add = [&](EquivalenceRelation t) {
    if (seen.insert(t).second) list.push_back(std::move(t));
  };
  add(EquivalenceRelation::Discrete(c));
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a + 1; b < c; ++b) add(PrincipalCongruence(algebra, a, b));
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto join = JoinEq(list[i], list[j]);
      if (!IsCongruence(join, algebra).holds) {
        ++out.join_repairs;
        join = CongruenceGenerated(algebra, join);
      }
      add(std::move(join));
    }
  }
  out.members = std::move(list);
  out.lattice = InclusionLattice(out.members);
  return out;
}

CongruenceRepVerdict IsCongruenceRepresentation(const FiniteLattice& lattice,
                                                const FiniteAlgebra& algebra,
                                                const Budgets& budgets) {
  CongruenceRepVerdict v;
  v.congruences = ComputeCongruenceLattice(algebra, budgets);
  if (v.congruences.lattice.size() != lattice.size()) return v;
  auto iso = FindIsomorphism(lattice, Dual(v.congruences.lattice), budgets);
  if (iso) {
    v.holds = true;
    v.isomorphism = iso->map;
  }
  return v;
}

AlgebraSearchResult SearchAlgebra(const FiniteLattice& lattice,
                                  const AlgebraSearchOptions& options,
                                  const Budgets& budgets) {
  if (options.max_carrier > 5) FailBudget("search_carrier", options.max_carrier, 5);
  const FiniteLattice target = options.match_dual ? Dual(lattice) : lattice;
  const std::size_t t = target.size();
  AlgebraSearchResult result;

  for (std::size_t c = 1; c <= options.max_carrier; ++c) {
    const auto partitions = AllPartitions(c);
    if (t > partitions.size()) continue;
    const std::uint64_t full = partitions.size() == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << partitions.size()) - 1;
    auto masks_for = [&](std::size_t arity, std::size_t limit) {
      std::vector<std::uint64_t> masks;
      if (limit == 0) return masks;
      const std::size_t tuples = Power(c, arity);
      const std::size_t tables = Power(c, tuples);
      if (tuples > 16 || tables > budgets.search_tables) {
        FailBudget("search_tables", tables, budgets.search_tables);
      }
      std::vector<std::uint32_t> table(tuples);
      for (std::size_t idx = 0; idx < tables; ++idx) {
        Digits(idx, c, table);
        auto a = FiniteAlgebra::Make(c, {Operation{arity, table}});
        std::uint64_t m = 0;
        for (std::size_t p = 0; p < partitions.size(); ++p) {
          if (IsCongruence(partitions[p], a).holds) m |= std::uint64_t{1} << p;
        }
        masks.push_back(m);
      }
      return masks;
    };
    const auto unary = masks_for(1, options.max_unary_ops);
    const auto binary = masks_for(2, options.max_binary_ops);

    std::map<std::uint64_t, bool> verdicts;
    auto matches = [&](std::uint64_t mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != t) return false;
      auto it = verdicts.find(mask);
      if (it != verdicts.end()) return it->second;
      std::vector<EquivalenceRelation> members;
      for (std::size_t p = 0; p < partitions.size(); ++p) {
        if (mask >> p & 1) members.push_back(partitions[p]);
      }
      const bool ok =
          FindIsomorphism(target, InclusionLattice(members), budgets).has_value();
      verdicts.emplace(mask, ok);
      return ok;
    };

    std::vector<std::size_t> picked_u, picked_b;
    bool stop = false;
    // Chooses `left` more tables with index >= start from `masks`.
    std::function<bool(const std::vector<std::uint64_t>&, std::vector<std::size_t>&,
                       std::size_t, std::size_t, std::uint64_t,
                       const std::function<bool(std::uint64_t)>&)>
        choose = [&](const std::vector<std::uint64_t>& masks,
                     std::vector<std::size_t>& picked, std::size_t start,
                     std::size_t left, std::uint64_t mask,
                     const std::function<bool(std::uint64_t)>& done) -> bool {
      if (static_cast<std::size_t>(std::popcount(mask)) < t) return false;
      if (left == 0) return done(mask);
      for (std::size_t i = start; i + left <= masks.size(); ++i) {
        picked.push_back(i);
        if (choose(masks, picked, i + 1, left - 1, mask & masks[i], done)) return true;
        picked.pop_back();
        if (stop) return false;
      }
      return false;
    };

    for (std::size_t u = 0; u <= options.max_unary_ops && !stop; ++u) {
      for (std::size_t b = 0; b <= options.max_binary_ops && !stop; ++b) {
        picked_u.clear();
        picked_b.clear();
        const bool found = choose(unary, picked_u, 0, u, full, [&](std::uint64_t mu) {
          return choose(binary, picked_b, 0, b, mu, [&](std::uint64_t m) {
            if (++result.candidates > budgets.search_tables) {
              result.budget_exhausted = true;
              stop = true;
              return false;
            }
            return matches(m);
          });
        });
        if (!found) continue;
        std::vector<Operation> ops;
        std::vector<std::uint32_t> table(c);
        for (auto i : picked_u) {
          Digits(i, c, table);
          ops.push_back({1, table});
        }
        std::vector<std::uint32_t> table2(c * c);
        for (auto i : picked_b) {
          Digits(i, c, table2);
          ops.push_back({2, table2});
        }
        auto algebra = FiniteAlgebra::Make(c, std::move(ops));
        auto cg = ComputeCongruenceLattice(algebra, budgets);
        auto iso = FindIsomorphism(target, cg.lattice, budgets);
        if (!iso) continue;  // unreachable when the masks are right
        result.algebra = std::move(algebra);
        result.isomorphism = iso->map;
        return result;
      }
    }
    if (stop) break;
  }
  return result;
}

}  // namespace latkit
