// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "collector/numeric.hpp"

namespace collector {

/// Triangular table of Stirling numbers of the second kind a(n, k) for
/// 1 <= k <= n <= n_max, filled by a(n,k) = a(n-1,k-1) + k a(n-1,k) from
/// a(1,1) = 1. Indices are 1-based.
class StirlingTable {
 public:
  explicit StirlingTable(std::uint32_t n_max);

  std::uint32_t n_max() const { return n_max_; }

  /// a(n, k); zero for k > n or k = 0. Requires 1 <= n <= n_max.
  const BigInt& at(std::uint32_t n, std::uint32_t k) const;

 private:
  std::uint32_t n_max_;
  // Row n (1-based) occupies rows_[n - 1] with entries k = 1..n.
  std::vector<std::vector<BigInt>> rows_;
};

/// Recurrence-built table; see StirlingTable.
StirlingTable stirling_table(std::uint32_t n_max);

/// Alternating sum of (-1)^(k-j) C(k,j) j^n over j = 1..k, before the
/// division by k!. Equals k! a(n, k).
BigInt stirling_alternating_sum(std::uint32_t n, std::uint32_t k);

/// a(n, k) = alternating sum / k!. The division must be exact; a remainder
/// aborts. Returns 0 for k > n.
BigInt stirling_explicit(std::uint32_t n, std::uint32_t k);

}  // namespace collector
