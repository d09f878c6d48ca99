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
#include <stdexcept>
#include <string>

#include "collector/assert.hpp"
#include "collector/stirling.hpp"

namespace collector {

namespace {

void check_closed_form_domain(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  if (m < 1 || n < 1 || k < 1 || k > m) {
    throw std::domain_error("closed form needs 1 <= k <= m and n >= 1 (got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

void check_table_size(std::uint32_t m, std::uint32_t n_max, const TableLimits& limits) {
  const auto cells = (static_cast<std::size_t>(n_max) + 1) * (static_cast<std::size_t>(m) + 1);
  if (cells > limits.max_cells) {
    throw std::length_error("exact table of " + std::to_string(cells) + " cells exceeds the limit of " +
                            std::to_string(limits.max_cells));
  }
}

double binomial_double(std::uint32_t n, std::uint32_t k) {
  if (k > n) {
    return 0.0;
  }
  double result = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

ExactDpStepper::ExactDpStepper(std::uint32_t m) : m_(m), counts_(m + 1) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  counts_[0] = 1;
}

void ExactDpStepper::step() {
  // Descending k so counts_[k - 1] still holds the previous row.
  for (std::uint32_t k = m_; k >= 1; --k) {
    counts_[k] *= k;
    counts_[k] += counts_[k - 1] * (m_ - k + 1);
  }
  counts_[0] = 0;
  denom_ *= m_;
  ++n_;
}

std::vector<Rational> ExactDpStepper::row() const {
  std::vector<Rational> out;
  out.reserve(counts_.size());
  for (const auto& c : counts_) {
    out.emplace_back(c, denom_);
  }
  return out;
}

DistTable dp_pmf(std::uint32_t m, std::uint32_t n_max, TableLimits limits) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  check_table_size(m, n_max, limits);
  DistTable table{m, n_max, {}};
  table.p.reserve(n_max + 1);
  ExactDpStepper stepper(m);
  table.p.push_back(stepper.row());
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    stepper.step();
    table.p.push_back(stepper.row());
  }
  return table;
}

std::vector<Rational> dp_row(std::uint32_t m, std::uint32_t n) {
  ExactDpStepper stepper(m);
  while (stepper.n() < n) {
    stepper.step();
  }
  return stepper.row();
}

Rational closed_form_pmf(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  check_closed_form_domain(m, n, k);
  return Rational(binomial(m, k) * stirling_alternating_sum(n, k), pow_int(m, n));
}

Rational closed_form_pmf_rude(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  check_closed_form_domain(m, n, k);
  // 1/m^(n-k) written as m^k/m^n; n < k is allowed and the sum is then zero.
  const Rational scale(pow_int(m, k), pow_int(m, n));
  const Rational a_nk(stirling_alternating_sum(n, k), factorial(k));
  return scale * falling_product(m, k) * a_nk;
}

DistTable closed_form_table(std::uint32_t m, std::uint32_t n_max, ClosedForm form, TableLimits limits) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  check_table_size(m, n_max, limits);
  DistTable table{m, n_max, {}};
  table.p.assign(n_max + 1, std::vector<Rational>(m + 1));
  table.p[0][0] = 1;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint32_t k = 1; k <= m; ++k) {
      table.p[n][k] = form == ClosedForm::kSimplified ? closed_form_pmf(m, n, k) : closed_form_pmf_rude(m, n, k);
    }
  }
  return table;
}

FloatDistTable float_pmf(std::uint32_t m, std::uint32_t n_max) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  FloatDistTable table{m, n_max, {}};
  table.p.reserve(n_max + 1);
  std::vector<double> row(m + 1, 0.0);
  row[0] = 1.0;
  table.p.push_back(row);
  const double md = m;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint32_t k = m; k >= 1; --k) {
      row[k] = row[k - 1] * ((md - k + 1) / md) + row[k] * (k / md);
    }
    row[0] = 0.0;
    table.p.push_back(row);
  }
  return table;
}

FloatClosedForm float_closed_form(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  check_closed_form_domain(m, n, k);
  FloatClosedForm out;
  double sum = 0.0;
  double max_term = 0.0;
  for (std::uint32_t j = 1; j <= k; ++j) {
    const double term = binomial_double(k, j) * std::pow(static_cast<double>(j), static_cast<double>(n));
    if (!std::isfinite(term)) {
      out.overflowed = true;
    }
    max_term = std::max(max_term, term);
    sum += ((k - j) % 2 == 0) ? term : -term;
  }
  out.value = binomial_double(m, k) / std::pow(static_cast<double>(m), static_cast<double>(n)) * sum;
  if (out.overflowed || !std::isfinite(sum) || sum == 0.0) {
    out.cancellation_ratio = std::numeric_limits<double>::infinity();
  } else {
    out.cancellation_ratio = max_term / std::abs(sum);
  }
  return out;
}

Rational mean_coupons(std::uint32_t m, std::uint32_t n) {
  ExactDpStepper stepper(m);
  while (stepper.n() < n) {
    stepper.step();
  }
  BigInt weighted = 0;
  for (std::uint32_t k = 1; k <= m; ++k) {
    weighted += k * stepper.count(k);
  }
  return Rational(weighted, stepper.denominator());
}

CompletionStats completion_stats(std::uint32_t m, double tail_tol) {
  if (m < 1 || !(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw std::invalid_argument("completion_stats needs m >= 1 and 0 < tail_tol < 1");
  }
  CompletionStats stats;
  stats.m = m;
  const double md = m;
  const double stay = 1.0 - 1.0 / md;
  std::vector<double> row(m + 1, 0.0);
  row[0] = 1.0;
  double majorant = md;  // m (1 - 1/m)^n
  for (std::uint32_t n = 0;; ++n) {
    if (n > 0) {
      for (std::uint32_t k = m; k >= 1; --k) {
        row[k] = row[k - 1] * ((md - k + 1) / md) + row[k] * (k / md);
      }
      row[0] = 0.0;
      majorant *= stay;
    }
    // Survival summed over the positive transient cells, not as 1 - cdf.
    double survival = 0.0;
    for (std::uint32_t k = 0; k < m; ++k) {
      survival += row[k];
    }
    const double cdf = row[m];
    stats.pmf.push_back(n == 0 ? cdf : cdf - stats.cdf.back());
    stats.cdf.push_back(cdf);
    stats.mean += survival;
    if (majorant < tail_tol / md) {
      break;
    }
  }
  return stats;
}

}  // namespace collector
