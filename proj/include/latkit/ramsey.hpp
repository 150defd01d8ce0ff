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

#ifndef LATKIT_RAMSEY_HPP_
#define LATKIT_RAMSEY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latkit/budget.hpp"
#include "latkit/eqrel.hpp"

namespace latkit {

// Position of the pair <x, y>, x < y < n, in lexicographic order.
std::size_t PairIndex(std::size_t n, std::size_t x, std::size_t y);
std::size_t PairCount(std::size_t n);

// A function on the pairs of {0..n-1}, kept as its kernel (which pairs get
// equal values) and, when known, the raw values.
struct PairFunction {
  std::size_t n = 0;
  EquivalenceRelation kernel;
  std::optional<std::vector<std::int64_t>> values;

  static PairFunction FromValues(std::size_t n, std::vector<std::int64_t> values);
  static PairFunction FromKernel(std::size_t n, EquivalenceRelation kernel);
  bool same(std::size_t x1, std::size_t y1, std::size_t x2, std::size_t y2) const {
    return kernel.related(PairIndex(n, x1, y1), PairIndex(n, x2, y2));
  }
};

// Listed in summary precedence.
enum class CanonicalForm { kConstant, kFirstCoordinate, kSecondCoordinate, kOneToOne };

std::string_view CanonicalFormName(CanonicalForm form);

struct CanonicalFormResult {
  std::vector<CanonicalForm> forms;  // in precedence order
  bool degenerate = false;           // |X| = 2: a single pair
  bool canonical() const { return !forms.empty(); }
  std::optional<CanonicalForm> primary() const {
    if (forms.empty()) return std::nullopt;
    return forms.front();
  }
};

// Every form whose biconditional holds on [X]^2. Throws SubsetTooSmall when
// |X| < 2.
CanonicalFormResult CanonicalFormOn(const PairFunction& f,
                                    std::span<const std::size_t> subset);

struct CanonicalSubset {
  std::vector<std::size_t> subset;
  CanonicalFormResult result;
};

// Lexicographically least k-subset on which f is canonical. Requires k >= 3.
std::optional<CanonicalSubset> FindCanonicalSubset(const PairFunction& f,
                                                   std::size_t k,
                                                   const Budgets& budgets = {});

struct Crt2Record {
  std::uint64_t kernel_id = 0;  // position in partition enumeration order
  EquivalenceRelation kernel;
  std::optional<CanonicalSubset> witness;
};

struct Crt2Survey {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t kernels = 0;
  std::uint64_t admitting = 0;
  std::uint64_t failing = 0;
  std::vector<std::uint64_t> failing_ids;
  std::vector<Crt2Record> records;
};

// Runs FindCanonicalSubset on every kernel of a function on the pairs of
// {0..n-1}. Throws SizeLimit when Bell(n(n-1)/2) exceeds budgets.partitions.
Crt2Survey RunCrt2Survey(std::size_t n, std::size_t k,
                         const Budgets& budgets = {});

// "kernel_id,admits_canonical,witness,form" with one row per kernel.
std::string Crt2Csv(const Crt2Survey& survey);

}  // namespace latkit

#endif  // LATKIT_RAMSEY_HPP_
