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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "collector/numeric.hpp"

namespace collector {

/// Exact table p[n][k] = P(X_n = k) for n = 0..n_max and k = 0..m, where X_n
/// counts distinct coupons after n uniform draws from m types.
struct DistTable {
  std::uint32_t m = 0;
  std::uint32_t n_max = 0;
  std::vector<std::vector<Rational>> p;

  const Rational& at(std::uint32_t n, std::uint32_t k) const { return p.at(n).at(k); }
};

/// Same shape as DistTable in binary64.
struct FloatDistTable {
  std::uint32_t m = 0;
  std::uint32_t n_max = 0;
  std::vector<std::vector<double>> p;

  double at(std::uint32_t n, std::uint32_t k) const { return p.at(n).at(k); }
};

/// Law of the completion time T = min{n : X_n = m}.
struct CompletionStats {
  std::uint32_t m = 0;
  std::vector<double> cdf;  ///< cdf[n] = P(T <= n) = p[n][m]
  std::vector<double> pmf;  ///< pmf[n] = P(T = n); pmf[0] = cdf[0]
  double mean = 0.0;
};

/// Caps whole-table storage for exact tables.
struct TableLimits {
  std::size_t max_cells = std::size_t{1} << 22;
};

/// Row-by-row exact master-equation solver with O(m) state.
///
/// Holds integer counts c[k] = p[n][k] * m^n, which obey
/// c'[k] = c[k-1] (m-k+1) + c[k] k, so each step is pure integer arithmetic.
class ExactDpStepper {
 public:
  explicit ExactDpStepper(std::uint32_t m);

  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }

  /// Advances from row n to row n + 1.
  void step();

  Rational prob(std::uint32_t k) const { return Rational(counts_.at(k), denom_); }
  double prob_double(std::uint32_t k) const { return ratio_to_double(counts_.at(k), denom_); }
  std::vector<Rational> row() const;

  /// Number of length-n draw sequences with exactly k distinct coupons.
  const BigInt& count(std::uint32_t k) const { return counts_.at(k); }
  /// m^n.
  const BigInt& denominator() const { return denom_; }

 private:
  std::uint32_t m_;
  std::uint32_t n_ = 0;
  std::vector<BigInt> counts_;
  BigInt denom_ = 1;
};

/// Exact table from the master equation. Throws std::length_error when the
/// table would exceed limits.max_cells.
DistTable dp_pmf(std::uint32_t m, std::uint32_t n_max, TableLimits limits = {});

/// Exact row n only, computed with O(m) storage.
std::vector<Rational> dp_row(std::uint32_t m, std::uint32_t n);

/// Simplified closed form (C(m,k)/m^n) sum_j (-1)^(k-j) C(k,j) j^n.
/// Throws std::domain_error unless 1 <= k <= m and n >= 1.
Rational closed_form_pmf(std::uint32_t m, std::uint32_t n, std::uint32_t k);

/// Product closed form (1/m^(n-k)) prod_h (1 - h/m) (1/k!) sum_j ...
/// Same domain as closed_form_pmf.
Rational closed_form_pmf_rude(std::uint32_t m, std::uint32_t n, std::uint32_t k);

enum class ClosedForm { kSimplified, kRude };

/// Whole table from a closed form, with p[0][0] = 1, p[0][k] = 0 and
/// p[n][0] = 0 for n >= 1 filling the cells the closed forms do not cover.
DistTable closed_form_table(std::uint32_t m, std::uint32_t n_max, ClosedForm form,
                            TableLimits limits = {});

/// Master equation in binary64. Every update adds nonnegative terms.
FloatDistTable float_pmf(std::uint32_t m, std::uint32_t n_max);

/// Naive binary64 evaluation of the simplified closed form.
struct FloatClosedForm {
  double value = 0.0;
  /// max_j |C(k,j) j^n| / |sum_j (-1)^(k-j) C(k,j) j^n|, +inf when an
  /// intermediate overflowed or the sum came out zero.
  double cancellation_ratio = 0.0;
  bool overflowed = false;
};

FloatClosedForm float_closed_form(std::uint32_t m, std::uint32_t n, std::uint32_t k);

/// E[X_n] = sum_k k p[n][k] from the exact DP row.
Rational mean_coupons(std::uint32_t m, std::uint32_t n);

/// Completion-time law and E[T] by the survival sum sum_n (1 - p[n][m]),
/// stopped once the majorant m (1 - 1/m)^n drops below tail_tol / m, which
/// bounds the neglected tail by tail_tol.
CompletionStats completion_stats(std::uint32_t m, double tail_tol);

}  // namespace collector
