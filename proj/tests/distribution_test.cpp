// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "collector/distribution.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "collector/oracle.hpp"

namespace collector {
namespace {

TEST(DpPmf, Examples) {
  EXPECT_EQ(dp_pmf(2, 2).at(2, 1), Rational(1, 2));
  for (std::uint32_t m = 1; m <= 9; ++m) {
    EXPECT_EQ(dp_pmf(m, 1).at(1, 1), Rational(1));
  }
  const auto t = dp_pmf(3, 0);
  EXPECT_EQ(t.at(0, 0), Rational(1));
  EXPECT_EQ(t.p.size(), 1U);
}

TEST(DpPmf, ThreeCouponsThreeDraws) {
  // 27 sequences: 3 constant, 18 with two values, 6 permutations.
  const auto t = dp_pmf(3, 3);
  EXPECT_EQ(t.at(3, 0), Rational());
  EXPECT_EQ(t.at(3, 1), Rational(1, 9));
  EXPECT_EQ(t.at(3, 2), Rational(2, 3));
  EXPECT_EQ(t.at(3, 3), Rational(2, 9));
}

TEST(DpPmf, StorageCap) {
  EXPECT_THROW(dp_pmf(10, 100, TableLimits{50}), std::length_error);
  EXPECT_NO_THROW(dp_pmf(4, 9, TableLimits{50}));
}

TEST(DpRow, MatchesTableRow) {
  const auto t = dp_pmf(5, 12);
  for (std::uint32_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(dp_row(5, n), t.p[n]);
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_pmf(3, 3, 3), Rational(2, 9));
  EXPECT_EQ(closed_form_pmf(2, 3, 2), Rational(3, 4));
  for (std::uint32_t m = 1; m <= 6; ++m) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      EXPECT_EQ(closed_form_pmf(m, n, 1), Rational(BigInt(1), pow_int(m, n - 1)));
    }
  }
  EXPECT_EQ(closed_form_pmf_rude(3, 3, 2), Rational(2, 3));
  EXPECT_EQ(closed_form_pmf_rude(2, 2, 2), Rational(1, 2));
}

TEST(ClosedForm, RudeEqualsSimplified) {
  for (std::uint32_t m = 1; m <= 12; ++m) {
    for (std::uint32_t n = 1; n <= 24; ++n) {
      for (std::uint32_t k = 1; k <= m; ++k) {
        ASSERT_EQ(closed_form_pmf_rude(m, n, k), closed_form_pmf(m, n, k)) << m << ' ' << n << ' ' << k;
      }
    }
  }
}

TEST(ClosedForm, DomainErrors) {
  EXPECT_THROW(closed_form_pmf(3, 2, 0), std::domain_error);
  EXPECT_THROW(closed_form_pmf(3, 2, 4), std::domain_error);
  EXPECT_THROW(closed_form_pmf(3, 0, 1), std::domain_error);
  EXPECT_THROW(closed_form_pmf_rude(3, 2, 0), std::domain_error);
}

TEST(ClosedForm, KAboveNVanishes) {
  EXPECT_EQ(closed_form_pmf(5, 2, 4), Rational());
  EXPECT_EQ(closed_form_pmf_rude(5, 2, 4), Rational());
}

TEST(Routes, ExactEquivalence) {
  for (std::uint32_t m = 1; m <= 8; ++m) {
    const auto dp = dp_pmf(m, 16);
    const auto simple = closed_form_table(m, 16, ClosedForm::kSimplified);
    const auto rude = closed_form_table(m, 16, ClosedForm::kRude);
    EXPECT_EQ(dp.p, simple.p) << m;
    EXPECT_EQ(dp.p, rude.p) << m;
  }
}

TEST(Routes, EnumerationOracle) {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const auto dp = dp_pmf(m, 8);
    for (std::uint32_t n = 0; n <= 8; ++n) {
      ASSERT_EQ(dp.p[n], oracle::enumerate_pmf(m, n)) << m << ' ' << n;
    }
  }
}

TEST(DistTableProperty, ConservationSupportMonotone) {
  for (std::uint32_t m = 1; m <= 10; ++m) {
    const auto t = dp_pmf(m, 30);
    for (std::uint32_t n = 0; n <= 30; ++n) {
      Rational sum;
      for (std::uint32_t k = 0; k <= m; ++k) {
        sum += t.at(n, k);
        const bool support = n == 0 ? k == 0 : (k >= 1 && k <= std::min(n, m));
        ASSERT_EQ(t.at(n, k).is_zero(), !support) << m << ' ' << n << ' ' << k;
      }
      ASSERT_EQ(sum, Rational(1));
      if (n > 0) {
        ASSERT_GE(t.at(n, m), t.at(n - 1, m));
      }
      // 1 - P(T <= n) <= m (1 - 1/m)^n
      const Rational bound = Rational(static_cast<long>(m)) * pow_rational(Rational(BigInt(m - 1), BigInt(m)), n);
      ASSERT_LE(Rational(1) - t.at(n, m), bound);
    }
  }
}

TEST(FloatPmf, Examples) {
  EXPECT_NEAR(float_pmf(2, 2).at(2, 2), 0.5, 1e-15);
  EXPECT_EQ(float_pmf(1, 5).at(5, 1), 1.0);
  const auto t = float_pmf(50, 5000);
  for (const auto& row : t.p) {
    double sum = 0.0;
    for (double p : row) {
      sum += p;
    }
    ASSERT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(FloatPmf, CloseToExact) {
  for (std::uint32_t m : {1U, 2U, 7U, 23U}) {
    const auto fl = float_pmf(m, 400);
    ExactDpStepper exact(m);
    for (std::uint32_t n = 0; n <= 400; ++n) {
      if (n > 0) {
        exact.step();
      }
      for (std::uint32_t k = 0; k <= m; ++k) {
        ASSERT_NEAR(fl.at(n, k), exact.prob_double(k), 1e-10);
      }
    }
  }
}

TEST(FloatClosedForm, Examples) {
  const auto small = float_closed_form(2, 3, 2);
  EXPECT_NEAR(small.value, 0.75, 1e-15);
  EXPECT_LT(small.cancellation_ratio, 10.0);
  EXPECT_FALSE(small.overflowed);

  const auto trivial = float_closed_form(1, 1, 1);
  EXPECT_EQ(trivial.value, 1.0);
  EXPECT_EQ(trivial.cancellation_ratio, 1.0);
}

TEST(FloatClosedForm, OverflowIsReported) {
  // 20^400 exceeds the binary64 range.
  const auto r = float_closed_form(20, 400, 20);
  EXPECT_TRUE(r.overflowed);
  EXPECT_GT(r.cancellation_ratio, 1e6);
  EXPECT_FALSE(std::isfinite(r.value));
  const double exact = dp_row(20, 400)[20].to_double();
  EXPECT_NEAR(float_pmf(20, 400).at(400, 20), exact, 1e-10);
}

TEST(FloatClosedForm, SubtractiveCancellation) {
  // sum_j (-1)^(20-j) C(20,j) j^20 = 20!, while the largest term is ~5.9e27.
  const auto r = float_closed_form(20, 20, 20);
  EXPECT_FALSE(r.overflowed);
  EXPECT_GT(r.cancellation_ratio, 1e9);
  const double exact = closed_form_pmf(20, 20, 20).to_double();
  EXPECT_GT(std::abs(r.value - exact) / exact, 1e-9);
}

TEST(MeanCoupons, Examples) {
  EXPECT_EQ(mean_coupons(2, 2), Rational(3, 2));
  for (std::uint32_t m = 1; m <= 5; ++m) {
    EXPECT_EQ(mean_coupons(m, 0), Rational());
    EXPECT_EQ(mean_coupons(m, 1), Rational(1));
  }
}

TEST(MeanCoupons, MatchesClosedExpression) {
  for (std::uint32_t m = 1; m <= 12; ++m) {
    for (std::uint32_t n = 0; n <= 24; ++n) {
      const Rational mean = mean_coupons(m, n);
      ASSERT_EQ(mean, oracle::expected_distinct(m, n));
      ASSERT_EQ((mean * Rational(pow_int(m, n))).denominator(), 1);
    }
  }
}

TEST(CompletionStats, Examples) {
  EXPECT_NEAR(completion_stats(1, 1e-9).mean, 1.0, 1e-9);
  EXPECT_NEAR(completion_stats(2, 1e-9).mean, 3.0, 1e-8);
  EXPECT_NEAR(completion_stats(10, 1e-9).mean, 29.28968254, 1e-6);
}

TEST(CompletionStats, LawInvariants) {
  for (std::uint32_t m : {1U, 3U, 8U, 25U}) {
    const auto s = completion_stats(m, 1e-10);
    ASSERT_EQ(s.cdf.size(), s.pmf.size());
    for (std::size_t n = 0; n < s.pmf.size(); ++n) {
      ASSERT_GE(s.pmf[n], 0.0);
      if (n > 0) {
        ASSERT_GE(s.cdf[n], s.cdf[n - 1]);
      }
    }
    EXPECT_NEAR(s.cdf.back(), 1.0, 1e-9);
    EXPECT_GE(s.mean, static_cast<double>(m));
    EXPECT_NEAR(s.mean, oracle::expected_completion(m).to_double(), 1e-9);
    for (std::uint32_t n = 0; n < m && n < s.cdf.size(); ++n) {
      EXPECT_EQ(s.cdf[n], 0.0);
    }
  }
}

TEST(CompletionStats, RejectsBadTolerance) {
  EXPECT_THROW(completion_stats(3, 0.0), std::invalid_argument);
  EXPECT_THROW(completion_stats(3, 1.0), std::invalid_argument);
  EXPECT_THROW(completion_stats(0, 0.1), std::invalid_argument);
}

}  // namespace
}  // namespace collector
