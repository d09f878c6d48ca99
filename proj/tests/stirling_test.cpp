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

#include <gtest/gtest.h>

namespace collector {
namespace {

TEST(StirlingTable, PaperSeedRows) {
  const auto a = stirling_table(4);
  EXPECT_EQ(a.at(1, 1), 1);
  EXPECT_EQ(a.at(2, 1), 1);
  EXPECT_EQ(a.at(2, 2), 1);
  // Row 3 = 1 3 1, so a(4,2) = a(3,1) + 2 a(3,2) = 7.
  EXPECT_EQ(a.at(3, 2), 3);
  EXPECT_EQ(a.at(4, 2), 7);
  EXPECT_EQ(a.at(4, 3), 6);
}

TEST(StirlingTable, ZeroOutsideTriangle) {
  const auto a = stirling_table(5);
  EXPECT_EQ(a.at(3, 4), 0);
  EXPECT_EQ(a.at(3, 0), 0);
}

TEST(StirlingTable, DiagonalAndFirstColumnAreOne) {
  const auto a = stirling_table(80);
  for (std::uint32_t n = 1; n <= 80; ++n) {
    EXPECT_EQ(a.at(n, 1), 1);
    EXPECT_EQ(a.at(n, n), 1);
    for (std::uint32_t k = 1; k <= n; ++k) {
      ASSERT_GT(a.at(n, k), 0);
    }
  }
}

TEST(StirlingExplicit, Examples) {
  EXPECT_EQ(stirling_explicit(3, 2), 3);
  for (std::uint32_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(stirling_explicit(n, n), 1) << n;
  }
  EXPECT_EQ(stirling_explicit(5, 7), 0);
}

TEST(StirlingExplicit, MatchesRecurrenceUpTo60) {
  const auto a = stirling_table(60);
  for (std::uint32_t n = 1; n <= 60; ++n) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      ASSERT_EQ(stirling_explicit(n, k), a.at(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(StirlingTable, SecondColumnClosedForm) {
  const auto a = stirling_table(60);
  for (std::uint32_t n = 2; n <= 60; ++n) {
    ASSERT_EQ(a.at(n, 2), pow_int(2, n - 1) - 1) << n;
  }
}

TEST(StirlingTable, BellNumbersConsistent) {
  const std::uint32_t n_max = 40;
  const auto a = stirling_table(n_max);
  std::vector<BigInt> bell(n_max + 1);
  bell[0] = 1;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      bell[n] += a.at(n, k);
    }
  }
  for (std::uint32_t n = 0; n < n_max; ++n) {
    BigInt rhs = 0;
    for (std::uint32_t k = 0; k <= n; ++k) {
      rhs += binomial(n, k) * bell[k];
    }
    ASSERT_EQ(bell[n + 1], rhs) << n;
  }
}

TEST(StirlingDeathTest, RowOutsideTableAborts) {
  const auto a = stirling_table(3);
  EXPECT_DEATH((void)a.at(4, 1), "row outside table");
}

}  // namespace
}  // namespace collector
