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
#include <span>
#include <vector>

#include "collector/distribution.hpp"

namespace collector {

/// SplitMix64: state advances by a fixed odd constant and each output is a
/// bijective mix of the state, so output i of a stream is mix(seed + (i+1)
/// gamma). Used as the per-shard stream of the simulator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t operator()();

  /// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
  std::uint64_t below(std::uint64_t bound);

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  /// The finalizer applied to every state, exposed for sub-seeding.
  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// Trials are split into consecutive shards of shard_size trials; shard s
/// draws from SplitMix64(seed ^ SplitMix64::mix(s + 1)). The shard layout,
/// not the worker count, determines the output.
struct SimConfig {
  std::uint32_t m = 1;
  std::uint32_t n = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t shard_size = std::uint64_t{1} << 16;
};

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard);

struct EmpiricalPmf {
  SimConfig config;
  std::vector<std::uint64_t> counts;  ///< k = 0..m
  std::vector<double> freqs;
};

/// Runs config.trials independent experiments of config.n draws each and
/// tallies the number of distinct coupons seen. workers = 0 picks the
/// hardware concurrency. Counts do not depend on workers.
EmpiricalPmf simulate(const SimConfig& config, unsigned workers = 1);

/// A reference distribution over k = 0..m for draw count n.
struct ReferenceRow {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::vector<double> p;
};

ReferenceRow reference_row(const DistTable& table, std::uint32_t n);
ReferenceRow reference_row(const FloatDistTable& table, std::uint32_t n);
ReferenceRow reference_row(const EmpiricalPmf& emp);

struct FitReport {
  double max_abs_deviation = 0.0;
  double total_variation = 0.0;
  /// Pearson statistic over pooled bins.
  double chi_square = 0.0;
  std::uint32_t bins = 0;
  std::uint32_t dof = 0;
  /// 99.9% quantile of chi-square with dof degrees of freedom; +inf when dof = 0.
  double chi_square_critical = 0.0;

  bool chi_square_ok() const { return chi_square <= chi_square_critical; }
};

/// Bins whose expected count is below 5 are merged into the next bin toward
/// k = m; a short remainder at the top joins the last closed bin.
/// Throws std::domain_error when (m, n) differ.
FitReport compare(const EmpiricalPmf& emp, const ReferenceRow& exact);

/// Upper quantile of the chi-square law.
double chi_square_quantile(std::uint32_t dof, double probability);

}  // namespace collector
