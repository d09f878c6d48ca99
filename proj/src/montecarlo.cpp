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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "collector/assert.hpp"

namespace collector {

namespace {
__extension__ using uint128 = unsigned __int128;
}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  COLLECTOR_ASSERT(bound > 0, "empty range");
  uint128 product = static_cast<uint128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<uint128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) { return seed ^ SplitMix64::mix(shard + 1); }

namespace {

void run_shard(const SimConfig& config, std::uint64_t shard, std::vector<std::uint64_t>& counts) {
  const std::uint64_t begin = shard * config.shard_size;
  const std::uint64_t end = std::min(config.trials, begin + config.shard_size);
  SplitMix64 rng(shard_seed(config.seed, shard));
  std::vector<char> seen(config.m, 0);
  for (std::uint64_t t = begin; t < end; ++t) {
    std::uint32_t distinct = 0;
    for (std::uint32_t draw = 0; draw < config.n; ++draw) {
      const auto coupon = rng.below(config.m);
      if (seen[coupon] == 0) {
        seen[coupon] = 1;
        ++distinct;
      }
    }
    ++counts[distinct];
    std::fill(seen.begin(), seen.end(), 0);
  }
}

}  // namespace

EmpiricalPmf simulate(const SimConfig& config, unsigned workers) {
  if (config.m < 1 || config.trials < 1 || config.shard_size < 1) {
    throw std::invalid_argument("simulate needs m >= 1, trials >= 1 and shard_size >= 1");
  }
  const std::uint64_t shards = (config.trials + config.shard_size - 1) / config.shard_size;
  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shards));

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(config.m + 1, 0));
  std::atomic<std::uint64_t> next_shard{0};
  auto worker = [&](unsigned id) {
    for (std::uint64_t s = next_shard++; s < shards; s = next_shard++) {
      run_shard(config, s, partial[id]);
    }
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) {
      pool.emplace_back(worker, id);
    }
  }

  EmpiricalPmf out;
  out.config = config;
  out.counts.assign(config.m + 1, 0);
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < part.size(); ++k) {
      out.counts[k] += part[k];
    }
  }
  out.freqs.reserve(out.counts.size());
  for (const auto c : out.counts) {
    out.freqs.push_back(static_cast<double>(c) / static_cast<double>(config.trials));
  }
  return out;
}

ReferenceRow reference_row(const DistTable& table, std::uint32_t n) {
  ReferenceRow row{table.m, n, {}};
  for (const auto& p : table.p.at(n)) {
    row.p.push_back(p.to_double());
  }
  return row;
}

ReferenceRow reference_row(const FloatDistTable& table, std::uint32_t n) { return {table.m, n, table.p.at(n)}; }

ReferenceRow reference_row(const EmpiricalPmf& emp) { return {emp.config.m, emp.config.n, emp.freqs}; }

double chi_square_quantile(std::uint32_t dof, double probability) {
  if (dof == 0) {
    return std::numeric_limits<double>::infinity();
  }
  return boost::math::quantile(boost::math::chi_squared_distribution<double>(dof), probability);
}

FitReport compare(const EmpiricalPmf& emp, const ReferenceRow& exact) {
  if (emp.config.m != exact.m || emp.config.n != exact.n || exact.p.size() != emp.counts.size()) {
    throw std::domain_error("empirical and reference rows differ in (m, n)");
  }
  FitReport report;
  const auto trials = static_cast<double>(emp.config.trials);
  for (std::size_t k = 0; k < exact.p.size(); ++k) {
    const double diff = std::abs(emp.freqs[k] - exact.p[k]);
    report.max_abs_deviation = std::max(report.max_abs_deviation, diff);
    report.total_variation += 0.5 * diff;
  }

  struct Bin {
    double expected = 0.0;
    double observed = 0.0;
  };
  std::vector<Bin> bins;
  Bin pending;
  for (std::size_t k = 0; k < exact.p.size(); ++k) {
    pending.expected += trials * exact.p[k];
    pending.observed += static_cast<double>(emp.counts[k]);
    if (pending.expected >= 5.0) {
      bins.push_back(pending);
      pending = {};
    }
  }
  if (pending.expected > 0.0 || pending.observed > 0.0) {
    if (bins.empty()) {
      bins.push_back(pending);
    } else {
      bins.back().expected += pending.expected;
      bins.back().observed += pending.observed;
    }
  }

  for (const auto& bin : bins) {
    if (bin.expected == 0.0) {
      report.chi_square = std::numeric_limits<double>::infinity();
      continue;
    }
    const double d = bin.observed - bin.expected;
    report.chi_square += d * d / bin.expected;
  }
  report.bins = static_cast<std::uint32_t>(bins.size());
  report.dof = report.bins > 0 ? report.bins - 1 : 0;
  report.chi_square_critical = chi_square_quantile(report.dof, 0.999);
  return report;
}

}  // namespace collector
