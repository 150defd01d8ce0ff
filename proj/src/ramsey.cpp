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

#include "latkit/ramsey.hpp"

#include <algorithm>
#include <sstream>

#include "latkit/error.hpp"

namespace latkit {

namespace {

std::uint64_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Advances a lexicographic k-combination of {0..n-1}; false past the last.
bool NextCombination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

std::size_t PairCount(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::size_t PairIndex(std::size_t n, std::size_t x, std::size_t y) {
  // pairs starting below x, then offset within row x
  return x * n - x * (x + 1) / 2 + (y - x - 1);
}

PairFunction PairFunction::FromValues(std::size_t n,
                                      std::vector<std::int64_t> values) {
  if (values.size() != PairCount(n)) {
    Fail(ErrorCode::kInvalidParameter,
         "pair function on n = " + std::to_string(n) + " needs " +
             std::to_string(PairCount(n)) + " values, got " +
             std::to_string(values.size()));
  }
  PairFunction f;
  f.n = n;
  f.kernel = KernelOf(values);
  f.values = std::move(values);
  return f;
}

PairFunction PairFunction::FromKernel(std::size_t n, EquivalenceRelation kernel) {
  if (kernel.ground_size() != PairCount(n)) {
    Fail(ErrorCode::kGroundMismatch,
         "kernel ground " + std::to_string(kernel.ground_size()) +
             " is not the pair count " + std::to_string(PairCount(n)));
  }
  PairFunction f;
  f.n = n;
  f.kernel = std::move(kernel);
  return f;
}

std::string_view CanonicalFormName(CanonicalForm form) {
  switch (form) {
    case CanonicalForm::kConstant: return "constant";
    case CanonicalForm::kFirstCoordinate: return "first_coordinate";
    case CanonicalForm::kSecondCoordinate: return "second_coordinate";
    case CanonicalForm::kOneToOne: return "one_to_one";
  }
  return "unknown";
}

CanonicalFormResult CanonicalFormOn(const PairFunction& f,
                                    std::span<const std::size_t> subset) {
  std::vector<std::size_t> xs(subset.begin(), subset.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) {
    Fail(ErrorCode::kSubsetTooSmall, "canonical form needs at least 2 points");
  }
  if (xs.back() >= f.n) {
    Fail(ErrorCode::kInvalidParameter,
         "point " + std::to_string(xs.back()) + " outside base of size " +
             std::to_string(f.n));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) pairs.emplace_back(xs[i], xs[j]);
  }
  bool constant = true, first = true, second = true, injective = true;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto [x1, y1] = pairs[p];
      const auto [x2, y2] = pairs[q];
      const bool same = f.same(x1, y1, x2, y2);
      constant &= same;
      injective &= !same;
      first &= same == (x1 == x2);
      second &= same == (y1 == y2);
    }
  }
  CanonicalFormResult out;
  out.degenerate = xs.size() == 2;
  if (constant) out.forms.push_back(CanonicalForm::kConstant);
  if (first) out.forms.push_back(CanonicalForm::kFirstCoordinate);
  if (second) out.forms.push_back(CanonicalForm::kSecondCoordinate);
  if (injective) out.forms.push_back(CanonicalForm::kOneToOne);
  return out;
}

std::optional<CanonicalSubset> FindCanonicalSubset(const PairFunction& f,
                                                   std::size_t k,
                                                   const Budgets& budgets) {
  if (k < 3) Fail(ErrorCode::kInvalidParameter, "target size k must be >= 3");
  if (k > f.n) return std::nullopt;
  const std::uint64_t count = Binomial(f.n, k);
  if (count > budgets.search_tables) {
    FailBudget("search_tables", count, budgets.search_tables);
  }
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  do {
    auto result = CanonicalFormOn(f, combo);
    if (result.canonical()) return CanonicalSubset{combo, std::move(result)};
  } while (NextCombination(combo, f.n));
  return std::nullopt;
}

Crt2Survey RunCrt2Survey(std::size_t n, std::size_t k, const Budgets& budgets) {
  if (n < 2) Fail(ErrorCode::kInvalidParameter, "survey needs n >= 2");
  if (k < 3) Fail(ErrorCode::kInvalidParameter, "target size k must be >= 3");
  const std::size_t pairs = PairCount(n);
  // Bell numbers overflow past 25; anything that large is over budget anyway.
  const std::uint64_t bell = pairs > 25 ? UINT64_MAX : BellNumber(pairs);
  if (bell > budgets.partitions) FailBudget("partitions", bell, budgets.partitions);
  Crt2Survey survey;
  survey.n = n;
  survey.k = k;
  survey.records.reserve(bell);
  std::uint64_t id = 0;
  ForEachPartition(pairs, [&](const EquivalenceRelation& kernel) {
    Crt2Record rec;
    rec.kernel_id = id++;
    rec.kernel = kernel;
    rec.witness = FindCanonicalSubset(PairFunction::FromKernel(n, kernel), k, budgets);
    if (rec.witness) {
      ++survey.admitting;
    } else {
      ++survey.failing;
      survey.failing_ids.push_back(rec.kernel_id);
    }
    survey.records.push_back(std::move(rec));
    return true;
  });
  survey.kernels = id;
  return survey;
}

std::string Crt2Csv(const Crt2Survey& survey) {
  std::ostringstream out;
  out << "kernel_id,admits_canonical,witness,form\n";
  for (const auto& rec : survey.records) {
    out << rec.kernel_id << ',' << (rec.witness ? "true" : "false") << ',';
    if (rec.witness) {
      for (std::size_t i = 0; i < rec.witness->subset.size(); ++i) {
        out << (i ? " " : "") << rec.witness->subset[i];
      }
      out << ',' << CanonicalFormName(*rec.witness->result.primary());
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace latkit
