// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "collector/stirling.hpp"

#include "collector/assert.hpp"

namespace collector {

namespace {
const BigInt kZero = 0;
}  // namespace

StirlingTable::StirlingTable(std::uint32_t n_max) : n_max_(n_max) {
  COLLECTOR_ASSERT(n_max >= 1, "stirling table needs n_max >= 1");
  rows_.reserve(n_max);
  rows_.push_back({BigInt(1)});
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(n);
    row[0] = prev[0];
    for (std::uint32_t k = 2; k < n; ++k) {
      row[k - 1] = prev[k - 2] + k * prev[k - 1];
    }
    row[n - 1] = prev[n - 2];
    rows_.push_back(std::move(row));
  }
}

const BigInt& StirlingTable::at(std::uint32_t n, std::uint32_t k) const {
  COLLECTOR_ASSERT(n >= 1 && n <= n_max_, "row outside table");
  if (k == 0 || k > n) {
    return kZero;
  }
  return rows_[n - 1][k - 1];
}

StirlingTable stirling_table(std::uint32_t n_max) { return StirlingTable(n_max); }

BigInt stirling_alternating_sum(std::uint32_t n, std::uint32_t k) {
  BigInt sum = 0;
  for (std::uint32_t j = 1; j <= k; ++j) {
    BigInt term = binomial(k, j) * pow_int(j, n);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt stirling_explicit(std::uint32_t n, std::uint32_t k) {
  COLLECTOR_ASSERT(n >= 1 && k >= 1, "stirling_explicit needs n, k >= 1");
  const BigInt sum = stirling_alternating_sum(n, k);
  const BigInt k_fact = factorial(k);
  COLLECTOR_ASSERT(mpz_divisible_p(sum.get_mpz_t(), k_fact.get_mpz_t()) != 0,
                   "alternating sum not divisible by k!");
  BigInt result;
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), k_fact.get_mpz_t());
  return result;
}

}  // namespace collector
