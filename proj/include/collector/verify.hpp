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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace collector {

struct VerifyOptions {
  std::uint32_t m_max = 6;
  std::uint32_t n_max = 12;
  std::uint32_t stirling_n_max = 60;
  /// Exhaustive enumeration runs on m <= min(m_max, 4), n <= min(n_max, 8)
  /// unless raised here.
  std::uint32_t enum_m_max = 4;
  std::uint32_t enum_n_max = 8;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0x5eed2026ULL;
  unsigned workers = 1;
};

struct VerifyCheck {
  std::string name;
  std::string scope;
  bool passed = false;
  /// Worst deviation observed; empty for exact comparisons.
  std::optional<double> deviation;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

/// Runs every cross-route equivalence suite over the envelope in options.
VerifyReport run_verify(const VerifyOptions& options);

/// Aligned plain-text table, one row per check plus an overall line.
void write_table(std::ostream& os, const VerifyReport& report);
void write_json(std::ostream& os, const VerifyReport& report);

/// Monte Carlo acceptance envelope: 10 binomial standard errors at p = 1/2.
double mc_tolerance(std::uint64_t trials);

}  // namespace collector
