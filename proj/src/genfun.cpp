// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "collector/genfun.hpp"

#include <algorithm>
#include <cmath>

#include "collector/assert.hpp"
#include "collector/stirling.hpp"

namespace collector {

PolyY::PolyY(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

PolyY::PolyY(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyY PolyY::constant(const Rational& c) { return PolyY{c}; }

PolyY PolyY::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return PolyY(std::move(coeffs));
}

Rational PolyY::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

PolyY PolyY::derivative() const {
  if (coeffs_.size() <= 1) {
    return {};
  }
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  }
  return PolyY(std::move(out));
}

PolyY PolyY::shift() const {
  if (is_zero()) {
    return {};
  }
  std::vector<Rational> out(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return PolyY(std::move(out));
}

Rational PolyY::eval(const Rational& y) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * y + *it;
  }
  return acc;
}

double PolyY::eval(double y) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * y + it->to_double();
  }
  return acc;
}

PolyY& PolyY::operator+=(const PolyY& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] += rhs.coeffs_[k];
  }
  trim();
  return *this;
}

PolyY& PolyY::operator-=(const PolyY& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] -= rhs.coeffs_[k];
  }
  trim();
  return *this;
}

PolyY& PolyY::operator*=(const Rational& c) {
  for (auto& x : coeffs_) {
    x *= c;
  }
  trim();
  return *this;
}

PolyY operator*(const PolyY& a, const PolyY& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PolyY(std::move(out));
}

void PolyY::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

PolyY apply_recurrence(const PolyY& g, std::uint32_t m) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  const Rational inv_m(BigInt(1), BigInt(m));
  // (1 - y)/m * g' = g'/m - y g'/m
  const PolyY dg = g.derivative() * inv_m;
  return (g + dg - dg.shift()).shift();
}

PolyY gn_by_recurrence(std::uint32_t m, std::uint32_t n) {
  PolyY g = PolyY::constant(1);
  for (std::uint32_t i = 0; i < n; ++i) {
    g = apply_recurrence(g, m);
  }
  return g;
}

PolyY gn_direct(std::uint32_t m, std::uint32_t n) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  if (n == 0) {
    return PolyY::constant(1);
  }
  // Terms with k > m vanish through the factor (1 - m/m).
  if (n > m) {
    COLLECTOR_ASSERT(falling_product(m, m + 1).is_zero(), "tail beyond k = m must vanish");
  }
  const StirlingTable a(n);
  const std::uint32_t top = std::min(n, m);
  std::vector<Rational> coeffs(top + 1);
  for (std::uint32_t k = 1; k <= top; ++k) {
    const Rational scale(pow_int(m, k), pow_int(m, n));
    coeffs[k] = scale * falling_product(m, k) * Rational(a.at(n, k));
  }
  return PolyY(std::move(coeffs));
}

EgfSeries::EgfSeries(std::uint32_t m, std::uint32_t order, std::vector<PolyY> terms)
    : m_(m), order_(order), terms_(std::move(terms)) {
  COLLECTOR_ASSERT(terms_.size() == static_cast<std::size_t>(order) + 1, "one term per order");
}

const PolyY& EgfSeries::term(std::uint32_t n) const {
  COLLECTOR_ASSERT(n <= order_, "term beyond truncation order");
  return terms_[n];
}

double EgfSeries::eval(double x, double y) const {
  double sum = 0.0;
  double x_pow_over_fact = 1.0;
  for (std::uint32_t n = 0; n <= order_; ++n) {
    if (n > 0) {
      x_pow_over_fact *= x / n;
    }
    sum += x_pow_over_fact * terms_[n].eval(y);
  }
  return sum;
}

namespace {

// Power series in x whose coefficients (ordinary, not exponential) are
// polynomials in y, truncated after x^order.
using XSeries = std::vector<PolyY>;

XSeries multiply_truncated(const XSeries& a, const XSeries& b, std::uint32_t order) {
  XSeries out(order + 1);
  for (std::uint32_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::uint32_t j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

}  // namespace

EgfSeries egf_expand(std::uint32_t m, std::uint32_t order) {
  COLLECTOR_ASSERT(m >= 1, "need at least one coupon type");
  // 1 - y(1 - e^(x/m)) = 1 + y sum_{n>=1} x^n / (m^n n!)
  XSeries bracket(order + 1);
  bracket[0] = PolyY::constant(1);
  for (std::uint32_t n = 1; n <= order; ++n) {
    bracket[n] = PolyY::monomial(Rational(BigInt(1), pow_int(m, n) * factorial(n)), 1);
  }

  XSeries result(order + 1);
  result[0] = PolyY::constant(1);
  XSeries base = bracket;
  for (std::uint32_t e = m; e > 0; e >>= 1) {
    if (e & 1U) {
      result = multiply_truncated(result, base, order);
    }
    if (e > 1) {
      base = multiply_truncated(base, base, order);
    }
  }

  std::vector<PolyY> terms;
  terms.reserve(order + 1);
  for (std::uint32_t n = 0; n <= order; ++n) {
    terms.push_back(result[n] * Rational(factorial(n)));
  }
  return EgfSeries(m, order, std::move(terms));
}

double egf_closed_eval(std::uint32_t m, double x, double y) {
  // 1 - e^(x/m) = -expm1(x/m); keeps the y = 1 case at e^(x/m) to the ulp.
  const double bracket = 1.0 + y * std::expm1(x / m);
  return std::pow(bracket, static_cast<double>(m));
}

}  // namespace collector
