// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "collector/oracle.hpp"

#include <stdexcept>

#include "collector/assert.hpp"

namespace collector::oracle {

std::vector<Rational> enumerate_pmf(std::uint32_t m, std::uint32_t n, std::uint64_t max_sequences) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (total > max_sequences / m) {
      throw std::length_error("enumeration space m^n too large");
    }
    total *= m;
  }

  std::vector<std::uint64_t> counts(m + 1, 0);
  std::vector<std::uint32_t> digits(n, 0);
  std::vector<std::uint32_t> multiplicity(m, 0);
  for (std::uint64_t seq = 0; seq < total; ++seq) {
    std::uint32_t distinct = 0;
    for (const auto d : digits) {
      if (multiplicity[d]++ == 0) {
        ++distinct;
      }
    }
    ++counts[distinct];
    for (const auto d : digits) {
      multiplicity[d] = 0;
    }
    // Odometer increment in base m.
    for (std::uint32_t i = 0; i < n; ++i) {
      if (++digits[i] < m) {
        break;
      }
      digits[i] = 0;
    }
  }

  std::vector<Rational> pmf;
  pmf.reserve(counts.size());
  for (const auto c : counts) {
    pmf.emplace_back(BigInt(static_cast<unsigned long>(c)), BigInt(static_cast<unsigned long>(total)));
  }
  return pmf;
}

Rational expected_completion(std::uint32_t m) {
  Rational sum;
  for (std::uint32_t j = 1; j <= m; ++j) {
    sum += Rational(BigInt(m), BigInt(j));
  }
  return sum;
}

Rational expected_distinct(std::uint32_t m, std::uint32_t n) {
  const Rational stay(BigInt(m - 1), BigInt(m));
  return Rational(static_cast<long>(m)) * (Rational(1) - pow_rational(stay, n));
}

}  // namespace collector::oracle
