// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "collector/montecarlo.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

namespace collector {
namespace {

SimConfig config(std::uint32_t m, std::uint32_t n, std::uint64_t trials, std::uint64_t seed) {
  SimConfig c;
  c.m = m;
  c.n = n;
  c.trials = trials;
  c.seed = seed;
  return c;
}

TEST(SplitMix64, ReferenceOutputs) {
  // First outputs for seed 1234567 from the reference splitmix64.c.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng(), 6457827717110365317ULL);
  EXPECT_EQ(rng(), 3203168211198807973ULL);
  EXPECT_EQ(rng(), 9817491932198370423ULL);
}

TEST(SplitMix64, BelowStaysInRangeAndCoversIt) {
  SplitMix64 rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7U);
    ++hits[v];
  }
  for (int h : hits) {
    EXPECT_GT(h, 800);
  }
  EXPECT_EQ(rng.below(1), 0U);
}

TEST(Simulate, Examples) {
  EXPECT_EQ(simulate(config(1, 5, 1000, 42)).counts[1], 1000U);
  EXPECT_EQ(simulate(config(3, 0, 100, 42)).counts[0], 100U);
  const auto emp = simulate(config(2, 2, 100000, 42));
  EXPECT_LT(std::abs(emp.freqs[1] - 0.5), 0.01);
}

TEST(Simulate, CountsAndSupport) {
  const auto emp = simulate(config(6, 4, 20000, 9));
  EXPECT_EQ(std::accumulate(emp.counts.begin(), emp.counts.end(), std::uint64_t{0}), 20000U);
  EXPECT_EQ(emp.counts[0], 0U);
  EXPECT_EQ(emp.counts[5], 0U);
  EXPECT_EQ(emp.counts[6], 0U);
  EXPECT_NEAR(std::accumulate(emp.freqs.begin(), emp.freqs.end(), 0.0), 1.0, 1e-12);
}

TEST(Simulate, DeterministicAcrossWorkerCounts) {
  SimConfig c = config(7, 9, 50000, 77);
  c.shard_size = 1000;
  const auto sequential = simulate(c, 1);
  for (unsigned workers : {2U, 3U, 8U}) {
    EXPECT_EQ(simulate(c, workers).counts, sequential.counts) << workers;
  }
  EXPECT_EQ(simulate(c, 1).counts, sequential.counts);
}

TEST(Simulate, SeedChangesOutput) {
  EXPECT_NE(simulate(config(5, 5, 10000, 1)).counts, simulate(config(5, 5, 10000, 2)).counts);
}

TEST(Simulate, RejectsBadConfig) {
  EXPECT_THROW(simulate(config(0, 3, 10, 1)), std::invalid_argument);
  EXPECT_THROW(simulate(config(3, 3, 0, 1)), std::invalid_argument);
}

TEST(Compare, AgainstItself) {
  const auto emp = simulate(config(5, 6, 5000, 5));
  const auto fit = compare(emp, reference_row(emp));
  EXPECT_EQ(fit.max_abs_deviation, 0.0);
  EXPECT_EQ(fit.total_variation, 0.0);
  EXPECT_NEAR(fit.chi_square, 0.0, 1e-18);
}

TEST(Compare, PointMassForOneCoupon) {
  const auto emp = simulate(config(1, 4, 300, 5));
  const auto fit = compare(emp, reference_row(dp_pmf(1, 4), 4));
  EXPECT_EQ(fit.total_variation, 0.0);
  EXPECT_EQ(fit.bins, 1U);
  EXPECT_TRUE(fit.chi_square_ok());
}

TEST(Compare, TenCouponsThirtyDraws) {
  const auto emp = simulate(config(10, 30, 1000000, 2026), 0);
  const auto fit = compare(emp, reference_row(float_pmf(10, 30), 30));
  EXPECT_LT(fit.max_abs_deviation, 5e-3);
  EXPECT_TRUE(fit.chi_square_ok()) << fit.chi_square << " vs " << fit.chi_square_critical;
}

TEST(Compare, PoolsSmallBinsUpward) {
  // Reference mass 0.001 at k = 1 with 1000 trials is one expected count, so
  // it joins k = 2.
  EmpiricalPmf emp;
  emp.config = config(3, 5, 1000, 0);
  emp.counts = {0, 1, 499, 500};
  emp.freqs = {0.0, 0.001, 0.499, 0.5};
  const ReferenceRow ref{3, 5, {0.0, 0.001, 0.499, 0.5}};
  const auto fit = compare(emp, ref);
  EXPECT_EQ(fit.bins, 2U);
  EXPECT_EQ(fit.dof, 1U);
  EXPECT_NEAR(fit.chi_square, 0.0, 1e-12);
}

TEST(Compare, ObservedOutsideSupportIsPooledButVisible) {
  EmpiricalPmf emp;
  emp.config = config(2, 3, 100, 0);
  emp.counts = {3, 25, 72};
  emp.freqs = {0.03, 0.25, 0.72};
  const auto fit = compare(emp, reference_row(dp_pmf(2, 3), 3));
  EXPECT_NEAR(fit.max_abs_deviation, 0.03, 1e-15);
  // k = 0 pools into k = 1: (28 - 25)^2/25 + (72 - 75)^2/75.
  EXPECT_EQ(fit.bins, 2U);
  EXPECT_NEAR(fit.chi_square, 0.48, 1e-12);
}

TEST(Compare, MismatchIsDomainError) {
  const auto emp = simulate(config(3, 4, 100, 1));
  EXPECT_THROW(compare(emp, reference_row(dp_pmf(3, 5), 5)), std::domain_error);
  EXPECT_THROW(compare(emp, reference_row(dp_pmf(4, 4), 4)), std::domain_error);
}

TEST(ChiSquareQuantile, KnownValues) {
  // Standard table values for the 0.999 quantile.
  EXPECT_NEAR(chi_square_quantile(1, 0.999), 10.828, 1e-3);
  EXPECT_NEAR(chi_square_quantile(5, 0.999), 20.515, 1e-3);
  EXPECT_TRUE(std::isinf(chi_square_quantile(0, 0.999)));
}

}  // namespace
}  // namespace collector
