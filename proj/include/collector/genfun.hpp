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
#include <initializer_list>
#include <vector>

#include "collector/numeric.hpp"

namespace collector {

/// Dense polynomial in y with exact coefficients; coefficient k multiplies
/// y^k. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is coefficientwise.
class PolyY {
 public:
  PolyY() = default;
  PolyY(std::initializer_list<Rational> coeffs);
  explicit PolyY(std::vector<Rational> coeffs);

  static PolyY constant(const Rational& c);
  /// c y^k
  static PolyY monomial(const Rational& c, std::size_t k);

  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of y^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PolyY derivative() const;
  /// y * p
  PolyY shift() const;

  Rational eval(const Rational& y) const;
  double eval(double y) const;

  PolyY& operator+=(const PolyY& rhs);
  PolyY& operator-=(const PolyY& rhs);
  PolyY& operator*=(const Rational& c);

  friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
  friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
  friend PolyY operator*(PolyY a, const Rational& c) { return a *= c; }
  friend PolyY operator*(const PolyY& a, const PolyY& b);
  friend bool operator==(const PolyY& a, const PolyY& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// y [g + ((1 - y)/m) g'], one step of the MGF recurrence in y = e^lambda.
PolyY apply_recurrence(const PolyY& g, std::uint32_t m);

/// g_n built by n applications of apply_recurrence to the constant 1.
PolyY gn_by_recurrence(std::uint32_t m, std::uint32_t n);

/// g_n(y) = sum_{k=1}^{min(n,m)} y^k / m^(n-k) prod_{h<k}(1 - h/m) a(n,k),
/// with g_0 = 1.
PolyY gn_direct(std::uint32_t m, std::uint32_t n);

/// Truncated expansion of G_m(x, y) = [1 - y(1 - e^(x/m))]^m.
/// term(n) is the polynomial multiplying x^n/n!, i.e. g_n(y).
class EgfSeries {
 public:
  EgfSeries(std::uint32_t m, std::uint32_t order, std::vector<PolyY> terms);

  std::uint32_t m() const { return m_; }
  std::uint32_t order() const { return order_; }
  /// Requires n <= order.
  const PolyY& term(std::uint32_t n) const;

  /// sum_{n <= order} x^n/n! term(n)(y) in binary64.
  double eval(double x, double y) const;

 private:
  std::uint32_t m_;
  std::uint32_t order_;
  std::vector<PolyY> terms_;
};

/// Expands the closed form as a power series in x up to x^order with exact
/// coefficients: e^(x/m) truncated, the bracket formed, then raised to the
/// m-th power under truncation.
EgfSeries egf_expand(std::uint32_t m, std::uint32_t order);

/// [1 - y(1 - e^(x/m))]^m in binary64.
double egf_closed_eval(std::uint32_t m, double x, double y);

}  // namespace collector
