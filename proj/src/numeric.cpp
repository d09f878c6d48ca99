// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "collector/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "collector/assert.hpp"

namespace collector {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  COLLECTOR_ASSERT(sgn(den) != 0, "zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  auto parse_int = [](std::string_view digits, BigInt& out) {
    if (digits.empty()) {
      throw std::invalid_argument("empty integer in rational literal");
    }
    std::string_view body = digits.front() == '-' ? digits.substr(1) : digits;
    if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("malformed integer '" + std::string(digits) + "'");
    }
    out.set_str(std::string(digits), 10);
  };
  parse_int(text.substr(0, slash), num);
  if (slash != std::string_view::npos) {
    parse_int(text.substr(slash + 1), den);
    if (sgn(den) == 0) {
      throw std::invalid_argument("zero denominator in rational literal");
    }
  }
  return Rational(num, den);
}

double Rational::to_double() const { return ratio_to_double(value_.get_num(), value_.get_den()); }

std::string Rational::to_string() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  COLLECTOR_ASSERT(!rhs.is_zero(), "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

double ratio_to_double(const BigInt& num, const BigInt& den) {
  COLLECTOR_ASSERT(sgn(den) != 0, "zero denominator");
  if (sgn(num) == 0) {
    return 0.0;
  }
  // Integer quotient with 54..56 significant bits, sticky bit folded into the
  // lowest bit (round to odd), then one rounding to 53 bits by the uint64 ->
  // double conversion: correctly rounded outside the subnormal range.
  BigInt a = abs(num);
  BigInt b = abs(den);
  const long shift =
      55 - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
  if (shift >= 0) {
    a <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    b <<= static_cast<mp_bitcnt_t>(-shift);
  }
  BigInt quotient;
  BigInt remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  std::uint64_t bits = mpz_get_ui(quotient.get_mpz_t());
  if (sgn(remainder) != 0) {
    bits |= 1U;
  }
  const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return sgn(num) * sgn(den) < 0 ? -magnitude : magnitude;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  COLLECTOR_ASSERT(n >= 0, "binomial requires n >= 0");
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    // result is now C(n-k+i, i) * i, so the division is exact.
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

BigInt factorial(std::uint32_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt pow_int(const BigInt& base, std::uint32_t e) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), e);
  return result;
}

Rational falling_product(std::uint32_t m, std::uint32_t k) {
  COLLECTOR_ASSERT(m >= 1, "falling_product requires m >= 1");
  if (k > m) {
    return Rational();
  }
  BigInt num = 1;
  for (std::uint32_t h = 0; h < k; ++h) {
    num *= m - h;
  }
  return Rational(num, pow_int(m, k));
}

Rational pow_rational(const Rational& base, std::uint32_t e) {
  // Powers of coprime integers stay coprime, so the result is canonical.
  return Rational(pow_int(base.numerator(), e), pow_int(base.denominator(), e));
}

}  // namespace collector
