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

// Reference values computed without the master equation, closed forms or
// Stirling numbers; used to cross-check those routes.
namespace collector::oracle {

/// P(X_n = k) for k = 0..m by walking all m^n draw sequences. Throws
/// std::length_error when m^n exceeds max_sequences.
std::vector<Rational> enumerate_pmf(std::uint32_t m, std::uint32_t n, std::uint64_t max_sequences = 1ULL << 26);

/// m H_m = sum_{j=1}^m m/j, the expected completion time.
Rational expected_completion(std::uint32_t m);

/// m (1 - (1 - 1/m)^n), the expected number of distinct coupons.
Rational expected_distinct(std::uint32_t m, std::uint32_t n);

}  // namespace collector::oracle
