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

#include "latkit/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "latkit/error.hpp"

namespace latkit {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits MakeBits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void SetBit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool TestBit(const Bits& b, std::size_t i) {
  return (b[i / 64] >> (i % 64)) & 1U;
}
std::size_t PopCount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace

class LatticeBuilder {
 public:
  // `leq` must already be reflexive and transitive.
  static FiniteLattice FromOrder(std::size_t n, std::vector<std::uint8_t> leq,
                                 std::vector<std::string> labels) {
    CheckLabels(n, labels);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (leq[i * n + j] && leq[j * n + i]) {
          std::ostringstream os;
          os << "antisymmetry fails for pair (" << i << ", " << j << ")";
          Fail(ErrorCode::kNotAPartialOrder, os.str());
        }
      }
    }
    std::vector<Bits> down(n, MakeBits(n)), up(n, MakeBits(n));
    std::vector<std::size_t> down_count(n), up_count(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[j * n + i]) SetBit(down[i], j);
        if (leq[i * n + j]) SetBit(up[i], j);
      }
      down_count[i] = PopCount(down[i]);
      up_count[i] = PopCount(up[i]);
    }
    FiniteLattice l;
    l.size_ = n;
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    Bits scratch = MakeBits(n);
    auto bound = [&](const std::vector<Bits>& sets,
                     const std::vector<std::size_t>& counts, std::size_t i,
                     std::size_t j, const char* what) -> Element {
      for (std::size_t w = 0; w < scratch.size(); ++w) {
        scratch[w] = sets[i][w] & sets[j][w];
      }
      std::size_t common = PopCount(scratch);
      std::size_t best = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (TestBit(scratch, k) && (best == n || counts[k] > counts[best])) {
          best = k;
        }
      }
      if (best == n || counts[best] != common) {
        std::ostringstream os;
        os << "pair (" << i << ", " << j << ") has no unique " << what;
        Fail(ErrorCode::kNotALattice, os.str());
      }
      return static_cast<Element>(best);
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Element m = bound(down, down_count, i, j, "meet");
        Element s = bound(up, up_count, i, j, "join");
        l.meet_[i * n + j] = l.meet_[j * n + i] = m;
        l.join_[i * n + j] = l.join_[j * n + i] = s;
      }
    }
    l.leq_ = std::move(leq);
    l.labels_ = std::move(labels);
    FinishBounds(l);
    return l;
  }

  // Tables supplied by a construction that is a lattice by definition.
  static FiniteLattice FromTables(std::size_t n, std::vector<std::uint8_t> leq,
                                  std::vector<Element> meet,
                                  std::vector<Element> join,
                                  std::vector<std::string> labels) {
    CheckLabels(n, labels);
    FiniteLattice l;
    l.size_ = n;
    l.leq_ = std::move(leq);
    l.meet_ = std::move(meet);
    l.join_ = std::move(join);
    l.labels_ = std::move(labels);
    FinishBounds(l);
    return l;
  }

 private:
  static void CheckLabels(std::size_t n, const std::vector<std::string>& labels) {
    if (n == 0) Fail(ErrorCode::kInvalidParameter, "lattice must be nonempty");
    if (!labels.empty() && labels.size() != n) {
      Fail(ErrorCode::kInvalidParameter,
           "labels must be empty or one per element");
    }
  }

  static void FinishBounds(FiniteLattice& l) {
    Element b = 0, t = 0;
    for (Element x = 1; x < l.size_; ++x) {
      b = l.meet(b, x);
      t = l.join(t, x);
    }
    l.bottom_ = b;
    l.top_ = t;
  }
};

std::string FiniteLattice::label(Element x) const {
  if (labels_.empty()) return std::to_string(x);
  return labels_[x];
}

std::optional<Element> FiniteLattice::find_label(std::string_view label) const {
  for (Element x = 0; x < labels_.size(); ++x) {
    if (labels_[x] == label) return x;
  }
  return std::nullopt;
}

std::vector<ElementPair> FiniteLattice::covers() const {
  std::vector<ElementPair> out;
  for (Element x = 0; x < size_; ++x) {
    for (Element y : upper_covers(x)) out.emplace_back(x, y);
  }
  return out;
}

std::vector<Element> FiniteLattice::upper_covers(Element x) const {
  std::vector<Element> out;
  for (Element y = 0; y < size_; ++y) {
    if (!lt(x, y)) continue;
    bool cover = true;
    for (Element z = 0; z < size_ && cover; ++z) {
      if (lt(x, z) && lt(z, y)) cover = false;
    }
    if (cover) out.push_back(y);
  }
  return out;
}

std::vector<Element> FiniteLattice::lower_covers(Element x) const {
  std::vector<Element> out;
  for (Element y = 0; y < size_; ++y) {
    if (!lt(y, x)) continue;
    bool cover = true;
    for (Element z = 0; z < size_ && cover; ++z) {
      if (lt(y, z) && lt(z, x)) cover = false;
    }
    if (cover) out.push_back(y);
  }
  return out;
}

std::vector<std::size_t> FiniteLattice::heights() const {
  // Processing in order of down-set size is a linear extension.
  std::vector<Element> order(size_);
  std::vector<std::size_t> below(size_, 0);
  for (Element x = 0; x < size_; ++x) {
    order[x] = x;
    for (Element y = 0; y < size_; ++y) below[x] += leq(y, x) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });
  std::vector<std::size_t> h(size_, 0);
  for (Element x : order) {
    for (Element y : lower_covers(x)) h[x] = std::max(h[x], h[y] + 1);
  }
  return h;
}

FiniteLattice BuildLattice(std::size_t size,
                           const std::vector<ElementPair>& leq_pairs,
                           std::vector<std::string> labels,
                           const Budgets& budgets) {
  if (size == 0) Fail(ErrorCode::kInvalidParameter, "lattice must be nonempty");
  if (size > budgets.lattice_elements) {
    FailBudget("lattice_elements", size, budgets.lattice_elements);
  }
  std::vector<std::uint8_t> leq(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) leq[i * size + i] = 1;
  for (const auto& [x, y] : leq_pairs) {
    if (x >= size || y >= size) {
      std::ostringstream os;
      os << "pair (" << x << ", " << y << ") references an element outside 0.."
         << size - 1;
      Fail(ErrorCode::kInvalidParameter, os.str());
    }
    leq[x * size + y] = 1;
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!leq[i * size + k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (leq[k * size + j]) leq[i * size + j] = 1;
      }
    }
  }
  return LatticeBuilder::FromOrder(size, std::move(leq), std::move(labels));
}

std::vector<std::string> ValidateLatticeAxioms(const FiniteLattice& l) {
  std::vector<std::string> out;
  const std::size_t n = l.size();
  auto note = [&](const std::string& what, std::initializer_list<Element> w) {
    std::ostringstream os;
    os << what << " at (";
    bool first = true;
    for (Element e : w) {
      os << (first ? "" : ", ") << e;
      first = false;
    }
    os << ")";
    out.push_back(os.str());
  };
  for (Element x = 0; x < n; ++x) {
    if (!l.leq(x, x)) note("reflexivity", {x});
    if (!l.leq(l.bottom(), x)) note("bottom", {x});
    if (!l.leq(x, l.top())) note("top", {x});
    for (Element y = 0; y < n; ++y) {
      if (x != y && l.leq(x, y) && l.leq(y, x)) note("antisymmetry", {x, y});
      Element m = l.meet(x, y), j = l.join(x, y);
      if (m != l.meet(y, x)) note("meet commutativity", {x, y});
      if (j != l.join(y, x)) note("join commutativity", {x, y});
      if (!l.leq(m, x) || !l.leq(m, y)) note("meet is not a lower bound", {x, y});
      if (!l.leq(x, j) || !l.leq(y, j)) note("join is not an upper bound", {x, y});
      if (l.meet(x, j) != x) note("absorption x^(xvy)", {x, y});
      if (l.join(x, m) != x) note("absorption xv(x^y)", {x, y});
      if (l.leq(x, y) != (m == x)) note("order/meet consistency", {x, y});
      for (Element z = 0; z < n; ++z) {
        if (l.leq(x, y) && l.leq(y, z) && !l.leq(x, z)) {
          note("transitivity", {x, y, z});
        }
        if (l.leq(z, x) && l.leq(z, y) && !l.leq(z, m)) {
          note("meet is not greatest", {x, y, z});
        }
        if (l.leq(x, z) && l.leq(y, z) && !l.leq(j, z)) {
          note("join is not least", {x, y, z});
        }
        if (l.meet(l.meet(x, y), z) != l.meet(x, l.meet(y, z))) {
          note("meet associativity", {x, y, z});
        }
        if (l.join(l.join(x, y), z) != l.join(x, l.join(y, z))) {
          note("join associativity", {x, y, z});
        }
      }
    }
    if (l.meet(x, x) != x || l.join(x, x) != x) note("idempotence", {x});
  }
  return out;
}

LatticeKind LatticeKind::Parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  auto number = [&](std::string_view digits) -> std::size_t {
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      Fail(ErrorCode::kInvalidParameter,
           "cannot parse lattice kind '" + std::string(text) + "'");
    }
    return value;
  };
  auto parametric = [&](std::string_view name, Family family,
                        std::optional<LatticeKind>& out) {
    std::string_view v = s;
    if (v.substr(0, name.size()) != name) return;
    v.remove_prefix(name.size());
    if (!v.empty() && v.front() == '(' && v.back() == ')') {
      v = v.substr(1, v.size() - 2);
    }
    if (v.empty() || !std::isdigit(static_cast<unsigned char>(v.front()))) return;
    out = LatticeKind{family, number(v)};
  };
  if (s == "pentagon" || s == "n5") return {Family::kPentagon, 5};
  if (s == "hexagon" || s == "h") return {Family::kHexagon, 6};
  std::optional<LatticeKind> out;
  parametric("boolean", Family::kBoolean, out);
  if (!out) parametric("chain", Family::kChain, out);
  if (!out) parametric("b", Family::kBoolean, out);
  if (!out) parametric("m", Family::kM, out);
  if (!out) {
    Fail(ErrorCode::kInvalidParameter,
         "unknown lattice kind '" + std::string(text) + "'");
  }
  return *out;
}

std::string LatticeKind::ToString() const {
  switch (family) {
    case Family::kBoolean: return "boolean(" + std::to_string(n) + ")";
    case Family::kM: return "m(" + std::to_string(n) + ")";
    case Family::kPentagon: return "pentagon";
    case Family::kHexagon: return "hexagon";
    case Family::kChain: return "chain(" + std::to_string(n) + ")";
  }
  return "?";
}

FiniteLattice StandardLattice(const LatticeKind& kind, const Budgets& budgets) {
  using F = LatticeKind::Family;
  if ((kind.family == F::kBoolean || kind.family == F::kM ||
       kind.family == F::kChain) &&
      kind.n == 0) {
    Fail(ErrorCode::kInvalidParameter, kind.ToString() + " requires n >= 1");
  }
  switch (kind.family) {
    case F::kBoolean:
      if (kind.n >= 63 || (std::size_t{1} << kind.n) > budgets.lattice_elements) {
        FailBudget("lattice_elements", kind.n >= 63 ? SIZE_MAX : std::size_t{1} << kind.n,
                   budgets.lattice_elements);
      }
      return BooleanLattice(kind.n);
    case F::kM:
      if (kind.n + 2 > budgets.lattice_elements) {
        FailBudget("lattice_elements", kind.n + 2, budgets.lattice_elements);
      }
      return MLattice(kind.n);
    case F::kPentagon: return Pentagon();
    case F::kHexagon: return Hexagon();
    case F::kChain:
      if (kind.n > budgets.lattice_elements) {
        FailBudget("lattice_elements", kind.n, budgets.lattice_elements);
      }
      return Chain(kind.n);
  }
  Fail(ErrorCode::kInvalidParameter, "unknown lattice family");
}

FiniteLattice BooleanLattice(std::size_t n) {
  if (n == 0) Fail(ErrorCode::kInvalidParameter, "boolean(n) requires n >= 1");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> leq(size * size);
  std::vector<Element> meet(size * size), join(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      leq[i * size + j] = (i & j) == i;
      meet[i * size + j] = static_cast<Element>(i & j);
      join[i * size + j] = static_cast<Element>(i | j);
    }
  }
  std::vector<std::string> labels(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (i == 0) {
      labels[i] = "0";
    } else if (i == size - 1) {
      labels[i] = "1";
    } else if (n == 2) {
      labels[i] = i == 1 ? "a" : "b";
    } else {
      std::string s = "{";
      for (std::size_t b = 0; b < n; ++b) {
        if ((i >> b) & 1U) s += (s.size() > 1 ? "," : "") + std::to_string(b);
      }
      labels[i] = s + "}";
    }
  }
  return LatticeBuilder::FromTables(size, std::move(leq), std::move(meet),
                                    std::move(join), std::move(labels));
}

FiniteLattice MLattice(std::size_t n) {
  if (n == 0) Fail(ErrorCode::kInvalidParameter, "m(n) requires n >= 1");
  std::vector<ElementPair> pairs;
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i <= n; ++i) {
    pairs.emplace_back(0, static_cast<Element>(i));
    pairs.emplace_back(static_cast<Element>(i), static_cast<Element>(n + 1));
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i - 1))
                             : "x" + std::to_string(i - 1));
  }
  labels.push_back("1");
  Budgets b;
  b.lattice_elements = n + 2;
  return BuildLattice(n + 2, pairs, std::move(labels), b);
}

FiniteLattice Pentagon() {
  return BuildLattice(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                      {"0", "a", "b", "c", "1"});
}

FiniteLattice Hexagon() {
  return BuildLattice(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}},
                      {"0", "a", "b", "c", "d", "1"});
}

FiniteLattice Chain(std::size_t k) {
  if (k == 0) Fail(ErrorCode::kInvalidParameter, "chain(k) requires k >= 1");
  std::vector<std::uint8_t> leq(k * k);
  std::vector<Element> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      leq[i * k + j] = i <= j;
      meet[i * k + j] = static_cast<Element>(std::min(i, j));
      join[i * k + j] = static_cast<Element>(std::max(i, j));
    }
  }
  return LatticeBuilder::FromTables(k, std::move(leq), std::move(meet),
                                    std::move(join), {});
}

FiniteLattice Dual(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Element> meet(n * n), join(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      leq[x * n + y] = l.leq(y, x);
      meet[x * n + y] = l.join(x, y);
      join[x * n + y] = l.meet(x, y);
    }
  }
  return LatticeBuilder::FromTables(n, std::move(leq), std::move(meet),
                                    std::move(join), l.labels());
}

FiniteLattice Product(const FiniteLattice& first, const FiniteLattice& second,
                      const Budgets& budgets) {
  const std::size_t n1 = first.size(), n2 = second.size();
  if (n1 > budgets.lattice_elements / n2) {
    FailBudget("lattice_elements", n1 * n2, budgets.lattice_elements);
  }
  const std::size_t n = n1 * n2;
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Element> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element a1 = static_cast<Element>(a / n2), a2 = static_cast<Element>(a % n2);
    for (std::size_t b = 0; b < n; ++b) {
      const Element b1 = static_cast<Element>(b / n2), b2 = static_cast<Element>(b % n2);
      leq[a * n + b] = first.leq(a1, b1) && second.leq(a2, b2);
      meet[a * n + b] = static_cast<Element>(first.meet(a1, b1) * n2 + second.meet(a2, b2));
      join[a * n + b] = static_cast<Element>(first.join(a1, b1) * n2 + second.join(a2, b2));
    }
  }
  std::vector<std::string> labels;
  if (!first.labels().empty() || !second.labels().empty()) {
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back("(" + first.label(static_cast<Element>(a / n2)) + "," +
                       second.label(static_cast<Element>(a % n2)) + ")");
    }
  }
  return LatticeBuilder::FromTables(n, std::move(leq), std::move(meet),
                                    std::move(join), std::move(labels));
}

FiniteLattice DoublingExtension(const FiniteLattice& l, Element a,
                                const Budgets& budgets) {
  if (a >= l.size()) {
    Fail(ErrorCode::kInvalidParameter, "doubling element outside the lattice");
  }
  // members[k] = (r, i)
  std::vector<std::pair<Element, int>> members;
  for (Element r = 0; r < l.size(); ++r) members.emplace_back(r, 0);
  for (Element r = 0; r < l.size(); ++r) {
    if (l.leq(a, r)) members.emplace_back(r, 1);
  }
  const std::size_t n = members.size();
  if (n > budgets.lattice_elements) {
    FailBudget("lattice_elements", n, budgets.lattice_elements);
  }
  std::vector<Element> index_of_upper(l.size(), 0);
  for (std::size_t k = l.size(); k < n; ++k) {
    index_of_upper[members[k].first] = static_cast<Element>(k);
  }
  auto index = [&](Element r, int i) -> Element {
    return i == 0 ? r : index_of_upper[r];
  };
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Element> meet(n * n), join(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto [r, i] = members[p];
    for (std::size_t q = 0; q < n; ++q) {
      const auto [s, j] = members[q];
      leq[p * n + q] = l.leq(r, s) && i <= j;
      meet[p * n + q] = index(l.meet(r, s), std::min(i, j));
      join[p * n + q] = index(l.join(r, s), std::max(i, j));
    }
  }
  std::vector<std::string> labels;
  if (!l.labels().empty()) {
    for (const auto& [r, i] : members) {
      labels.push_back(i == 0 ? l.label(r) : l.label(r) + "'");
    }
  }
  return LatticeBuilder::FromTables(n, std::move(leq), std::move(meet),
                                    std::move(join), std::move(labels));
}

FiniteLattice TwoOplus(const FiniteLattice& l) {
  const std::size_t n = l.size() + 1;
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Element> meet(n * n), join(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == 0 || y == 0) {
        leq[x * n + y] = x == 0;
        meet[x * n + y] = 0;
        join[x * n + y] = std::max(x, y);
      } else {
        leq[x * n + y] = l.leq(x - 1, y - 1);
        meet[x * n + y] = l.meet(x - 1, y - 1) + 1;
        join[x * n + y] = l.join(x - 1, y - 1) + 1;
      }
    }
  }
  std::vector<std::string> labels;
  if (!l.labels().empty()) {
    labels.push_back("0*");
    labels.insert(labels.end(), l.labels().begin(), l.labels().end());
  }
  return LatticeBuilder::FromTables(n, std::move(leq), std::move(meet),
                                    std::move(join), std::move(labels));
}

PrincipalIdeal MakePrincipalIdeal(const FiniteLattice& l, Element a) {
  if (a >= l.size()) {
    Fail(ErrorCode::kInvalidParameter, "ideal generator outside the lattice");
  }
  PrincipalIdeal out{Chain(1), {}};
  std::vector<Element> position(l.size(), 0);
  for (Element x = 0; x < l.size(); ++x) {
    if (l.leq(x, a)) {
      position[x] = static_cast<Element>(out.members.size());
      out.members.push_back(x);
    }
  }
  const std::size_t n = out.members.size();
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Element> meet(n * n), join(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Element x = out.members[p], y = out.members[q];
      leq[p * n + q] = l.leq(x, y);
      meet[p * n + q] = position[l.meet(x, y)];
      join[p * n + q] = position[l.join(x, y)];
    }
  }
  std::vector<std::string> labels;
  if (!l.labels().empty()) {
    for (Element x : out.members) labels.push_back(l.label(x));
  }
  out.lattice = LatticeBuilder::FromTables(n, std::move(leq), std::move(meet),
                                           std::move(join), std::move(labels));
  return out;
}

bool IsEmbedding(const FiniteLattice& pattern, const FiniteLattice& host,
                 const std::vector<Element>& map) {
  if (map.size() != pattern.size()) return false;
  std::vector<std::uint8_t> used(host.size(), 0);
  for (Element t : map) {
    if (t >= host.size() || used[t]) return false;
    used[t] = 1;
  }
  for (Element x = 0; x < pattern.size(); ++x) {
    for (Element y = 0; y < pattern.size(); ++y) {
      if (host.meet(map[x], map[y]) != map[pattern.meet(x, y)]) return false;
      if (host.join(map[x], map[y]) != map[pattern.join(x, y)]) return false;
    }
  }
  return true;
}

namespace {

constexpr Element kUnassigned = ~Element{0};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteLattice& host, const FiniteLattice& pattern)
      : host_(host), pattern_(pattern), map_(pattern.size(), kUnassigned),
        used_(host.size(), 0), produced_by_(pattern.size()) {
    const std::size_t n = pattern.size();
    std::vector<std::size_t> degree(n, 0);
    for (const auto& [x, y] : pattern.covers()) {
      ++degree[x];
      ++degree[y];
    }
    order_.resize(n);
    for (Element x = 0; x < n; ++x) order_[x] = x;
    std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) {
      return degree[a] > degree[b];
    });
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        produced_by_[pattern.meet(x, y)].emplace_back(x, y);
        produced_by_[pattern.join(x, y)].emplace_back(x, y);
      }
    }
  }

  std::optional<LatticeEmbedding> Run() {
    if (pattern_.size() > host_.size()) return std::nullopt;
    if (!Place(0)) return std::nullopt;
    return LatticeEmbedding{map_};
  }

 private:
  bool Consistent(Element p, Element t) const {
    for (Element q = 0; q < pattern_.size(); ++q) {
      const Element u = q == p ? t : map_[q];
      if (u == kUnassigned) continue;
      if (pattern_.leq(p, q) != host_.leq(t, u)) return false;
      if (pattern_.leq(q, p) != host_.leq(u, t)) return false;
      const Element m = pattern_.meet(p, q), j = pattern_.join(p, q);
      const Element mm = m == p ? t : map_[m];
      const Element jj = j == p ? t : map_[j];
      if (mm != kUnassigned && host_.meet(t, u) != mm) return false;
      if (jj != kUnassigned && host_.join(t, u) != jj) return false;
    }
    for (const auto& [x, y] : produced_by_[p]) {
      const Element u = map_[x], v = map_[y];
      if (u == kUnassigned || v == kUnassigned) continue;
      if (pattern_.meet(x, y) == p && host_.meet(u, v) != t) return false;
      if (pattern_.join(x, y) == p && host_.join(u, v) != t) return false;
    }
    return true;
  }

  bool Place(std::size_t k) {
    if (k == order_.size()) return true;
    const Element p = order_[k];
    for (Element t = 0; t < host_.size(); ++t) {
      if (used_[t] || !Consistent(p, t)) continue;
      map_[p] = t;
      used_[t] = 1;
      if (Place(k + 1)) return true;
      used_[t] = 0;
      map_[p] = kUnassigned;
    }
    return false;
  }

  const FiniteLattice& host_;
  const FiniteLattice& pattern_;
  std::vector<Element> map_;
  std::vector<std::uint8_t> used_;
  std::vector<Element> order_;
  std::vector<std::vector<ElementPair>> produced_by_;
};

}  // namespace

std::optional<LatticeEmbedding> FindSublatticeCopy(const FiniteLattice& host,
                                                   const FiniteLattice& pattern,
                                                   const Budgets& budgets) {
  if (host.size() > budgets.search_target) {
    FailBudget("search_target", host.size(), budgets.search_target);
  }
  return EmbeddingSearch(host, pattern).Run();
}

std::optional<LatticeEmbedding> FindIsomorphism(const FiniteLattice& first,
                                                const FiniteLattice& second,
                                                const Budgets& budgets) {
  if (first.size() != second.size()) return std::nullopt;
  auto profile = [](const FiniteLattice& l) {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (Element x = 0; x < l.size(); ++x) {
      p.emplace_back(l.lower_covers(x).size(), l.upper_covers(x).size());
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(first) != profile(second)) return std::nullopt;
  return FindSublatticeCopy(second, first, budgets);
}

DistributivityVerdict IsDistributive(const FiniteLattice& lattice,
                                     const Budgets& budgets) {
  DistributivityVerdict v;
  if (lattice.size() < 5) return v;
  if (auto e = FindSublatticeCopy(lattice, MLattice(3), budgets)) {
    v.distributive = false;
    v.pattern = "m3";
    v.witness = std::move(e);
    return v;
  }
  if (auto e = FindSublatticeCopy(lattice, Pentagon(), budgets)) {
    v.distributive = false;
    v.pattern = "pentagon";
    v.witness = std::move(e);
  }
  return v;
}

std::optional<std::vector<Element>> DistributiveLawViolation(
    const FiniteLattice& l) {
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      for (Element z = 0; z < l.size(); ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return std::vector<Element>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

BirkhoffVerdict BirkhoffOracle(const FiniteLattice& l, const Budgets& budgets) {
  BirkhoffVerdict v;
  for (Element x = 0; x < l.size(); ++x) {
    if (x != l.bottom() && l.lower_covers(x).size() == 1) {
      v.join_irreducibles.push_back(x);
    }
  }
  const std::size_t k = v.join_irreducibles.size();
  const std::size_t limit = std::min<std::size_t>(budgets.birkhoff_irreducibles, 62);
  if (k > limit) FailBudget("birkhoff_irreducibles", k, limit);
  const auto& ji = v.join_irreducibles;
  std::vector<std::uint64_t> below(k, 0);  // JIs strictly below ji[i]
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && l.leq(ji[j], ji[i])) below[i] |= std::uint64_t{1} << j;
    }
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i) {
      if (((mask >> i) & 1U) && (below[i] & ~mask) != 0) closed = false;
    }
    if (closed) ++v.down_set_count;
  }
  v.down_set_of.assign(l.size(), 0);
  for (Element x = 0; x < l.size(); ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      if (l.leq(ji[i], x)) v.down_set_of[x] |= std::uint64_t{1} << i;
    }
  }
  if (v.down_set_count != l.size()) {
    v.down_set_of.clear();
    return v;
  }
  std::vector<std::uint64_t> sorted = v.down_set_of;
  std::sort(sorted.begin(), sorted.end());
  bool ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  for (Element x = 0; x < l.size() && ok; ++x) {
    for (Element y = 0; y < l.size() && ok; ++y) {
      ok = v.down_set_of[l.meet(x, y)] == (v.down_set_of[x] & v.down_set_of[y]) &&
           v.down_set_of[l.join(x, y)] == (v.down_set_of[x] | v.down_set_of[y]);
    }
  }
  v.distributive = ok;
  if (!ok) v.down_set_of.clear();
  return v;
}

}  // namespace latkit
